"""
Timing of long-running operations (sweep points, commands) and a log of
unexpected command failures.
"""
from collections import Counter, deque
from dataclasses import dataclass
from functools import wraps
import logging
import time
from typing import Callable

logger = logging.getLogger(__name__)

# warn above this many seconds; create_app overrides it from config
SLOW_OPERATION_SECONDS = 30.0
MAX_TRACKED_ERRORS = 100


@dataclass
class OperationStats:
    count: int = 0
    total_time: float = 0.0
    max_time: float = 0.0
    slow_count: int = 0
    failed_count: int = 0

    @property
    def avg_time(self) -> float:
        return self.total_time / self.count if self.count else 0.0

    def to_dict(self):
        return {
            'count': self.count,
            'total_time': self.total_time,
            'avg_time': self.avg_time,
            'max_time': self.max_time,
            'slow_count': self.slow_count,
            'failed_count': self.failed_count
        }


class PerformanceMonitor:
    """Per-operation wall-clock totals for one process"""

    def __init__(self, slow_seconds: float = SLOW_OPERATION_SECONDS):
        self.slow_seconds = slow_seconds
        self.reset()

    def reset(self):
        self._operations = {}

    def record_operation(self, operation: str, duration: float, failed: bool = False):
        stats = self._operations.setdefault(operation, OperationStats())
        stats.count += 1
        stats.total_time += duration
        stats.max_time = max(stats.max_time, duration)
        if duration > self.slow_seconds:
            stats.slow_count += 1
        if failed:
            stats.failed_count += 1

    def get_stats(self):
        ops = self._operations.values()
        return {
            'total_operations': sum(s.count for s in ops),
            'slow_operations': sum(s.slow_count for s in ops),
            'failed_operations': sum(s.failed_count for s in ops),
            'operation_stats': {name: s.to_dict() for name, s in self._operations.items()}
        }


performance_monitor = PerformanceMonitor()


def configure_monitoring(app):
    performance_monitor.slow_seconds = float(
        app.config.get('SLOW_OPERATION_SECONDS', SLOW_OPERATION_SECONDS)
    )


def performance_logging(operation: str):
    """
    Decorator timing every call under `operation`.

    Logs OPERATION on success, SLOW OPERATION above the threshold and
    OPERATION ERROR when the call raises (the exception propagates).
    """
    def decorator(f: Callable):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = f(*args, **kwargs)
            except Exception as e:
                duration = time.perf_counter() - start
                performance_monitor.record_operation(operation, duration, failed=True)
                logger.error(f"OPERATION ERROR: {operation} | {type(e).__name__}: {e} | {duration:.3f}s")
                raise

            duration = time.perf_counter() - start
            performance_monitor.record_operation(operation, duration)
            if duration > performance_monitor.slow_seconds:
                logger.warning(f"SLOW OPERATION: {operation} took {duration:.3f}s")
            else:
                logger.info(f"OPERATION: {operation} | {duration:.3f}s")
            return result

        return decorated_function
    return decorator


class ErrorTracker:
    """Bounded log of unexpected errors raised inside commands"""

    def __init__(self, max_errors: int = MAX_TRACKED_ERRORS):
        self.errors = deque(maxlen=max_errors)
        self._by_type = Counter()

    def log_error(self, error_type: str, message: str, context: dict = None):
        self.errors.append({
            'timestamp': time.time(),
            'type': error_type,
            'message': message,
            'context': dict(context or {})
        })
        self._by_type[error_type] += 1
        logger.error(f"ERROR TRACKED: {error_type} | {message}", extra={'error_context': context})

    def get_recent_errors(self, limit: int = 10):
        return list(self.errors)[-limit:]

    def get_error_stats(self):
        return {
            'total_errors': len(self.errors),
            'by_type': dict(self._by_type),
            'recent_errors': self.get_recent_errors(5)
        }


error_tracker = ErrorTracker()

"""
Optional redis cache of experiment result rows.

Rows are stored as a JSON list under a key derived from the validated
experiment config, so a hit returns exactly what a fresh run would print.
"""
import hashlib
import json
import logging

import redis

logger = logging.getLogger(__name__)

CACHE_PREFIX = 'orbitlens:experiment:'

redis_client = None


def init_redis(app):
    """Connect when REDIS_URL is set; any failure leaves caching off"""
    global redis_client
    redis_client = None
    url = app.config.get('REDIS_URL')
    if not url:
        logger.debug("REDIS_URL unset, result cache disabled")
        return
    client = redis.Redis.from_url(url, decode_responses=True,
                                  socket_connect_timeout=5, socket_timeout=5)
    try:
        client.ping()
    except redis.RedisError as e:
        logger.warning(f"Redis unreachable at {url}: {e}; running without the result cache")
        return
    redis_client = client
    logger.info(f"Redis connected at {url}, experiment results will be cached")


def fingerprint(payload) -> str:
    """SHA-256 of a JSON-serializable payload with sorted keys"""
    text = json.dumps(payload, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def experiment_cache_key(payload) -> str:
    return f"{CACHE_PREFIX}{fingerprint(payload)}"


def store_rows(key, rows, ttl=86400) -> bool:
    """Store result rows; False when the cache is off or the write failed"""
    if redis_client is None:
        return False
    try:
        redis_client.setex(key, ttl, json.dumps(rows))
    except redis.RedisError as e:
        logger.warning(f"CACHE WRITE FAILED: {key} | {e}")
        return False
    return True


def load_rows(key):
    """Cached result rows, or None on a miss, a read error or with the cache off"""
    if redis_client is None:
        return None
    try:
        data = redis_client.get(key)
    except redis.RedisError as e:
        logger.warning(f"CACHE READ FAILED: {key} | {e}")
        return None
    if data is None:
        return None
    return json.loads(data)

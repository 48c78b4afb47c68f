import time
from functools import wraps

from loguru import logger


def timer(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        total_time = time.perf_counter() - start_time
        logger.debug(f"{func.__module__}.{func.__name__} took {total_time:.4f} seconds")
        return result

    return wrapper

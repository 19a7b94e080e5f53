# coding: utf-8

import os


DEFAULT_WEIGHTS = (0.3, 0.35, 0.35)

# twin steps copy neighbourhoods; keeping their total weight below 1/2
# keeps the edge count linear in n
BENCH_WEIGHTS = (0.6, 0.2, 0.2)


def env_int(name, default):
    value = os.environ.get(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        return default


def oracle_cap():
    return env_int('DHMV_ORACLE_CAP', 16)


def metric_cap():
    return env_int('DHMV_METRIC_CAP', 10)


def enumerate_cap():
    return env_int('DHMV_ENUMERATE_CAP', 8)


def log_level():
    return os.environ.get('DHMV_LOG_LEVEL', 'WARNING').upper()


def median(values):
    values = sorted(values)
    if not values:
        return None
    mid = len(values) // 2
    if len(values) % 2:
        return values[mid]
    return (values[mid - 1] + values[mid]) / 2.0

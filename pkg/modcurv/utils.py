# Copyright (c) 2023 Canonical Ltd.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Tuple, TypeVar

from modcurv.errors import ConfigException

LOG = logging.getLogger(__name__)

THREADS_ENV = "MODCURV_THREADS"
# Non-positive integer poles are detected within this distance.
POLE_TOLERANCE = 1e-12

T = TypeVar("T")
R = TypeVar("R")


def is_nonpositive_integer(value: float, tol: float = POLE_TOLERANCE) -> bool:
    """Whether value sits on a pole of the gamma function.

    :param value: real number to test
    :param tol: absolute distance accepted as a hit
    :rtype: bool
    """
    nearest = round(value)
    return nearest <= 0 and abs(value - nearest) <= tol


def is_integer(value: float, tol: float = POLE_TOLERANCE) -> bool:
    return abs(value - round(value)) <= tol


def parse_float_list(text: str) -> List[float]:
    """Parse a comma separated list of reals, e.g. ``3,4,5.5``.

    :raises: ConfigException on an empty list or a malformed entry
    """
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(float(item))
        except ValueError:
            raise ConfigException(f"Not a number: {item!r} in {text!r}")
    if not values:
        raise ConfigException(f"Empty list: {text!r}")
    return values


def get_thread_count(configured: Optional[int] = None) -> int:
    """Number of worker threads for grid sweeps.

    The MODCURV_THREADS environment variable wins over the configured value;
    without either, up to 8 threads are used.

    :param configured: value of ``threads`` from the settings, if any
    :rtype: int
    """
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            count = int(env)
        except ValueError:
            raise ConfigException(f"{THREADS_ENV} must be an integer, got {env!r}")
        if count < 1:
            raise ConfigException(f"{THREADS_ENV} must be positive, got {count}")
        return count
    if configured:
        return configured
    return min(8, os.cpu_count() or 1)


def parallel_map(
    func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None
) -> List[R]:
    """Map func over items on a thread pool, keeping input order.

    :param func: reentrant callable
    :param items: inputs
    :param threads: pool size, defaults to get_thread_count()
    """
    items = list(items)
    workers = threads or get_thread_count()
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]
    LOG.debug(f"Mapping {len(items)} items on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def singular_free_points(values: Iterable[float], radius: float) -> List[float]:
    """Values at least ``radius`` away from 1."""
    return [u for u in values if abs(u - 1) >= radius]


def singular_free_pairs(
    us: Iterable[float], vs: Iterable[float], radius: float
) -> List[Tuple[float, float]]:
    """Pairs (u, v) at least ``radius`` away from u = 1, v = 1, uv = 1 and u = v."""
    vs = list(vs)
    return [
        (u, v)
        for u in us
        for v in vs
        if min(abs(u - 1), abs(v - 1), abs(u * v - 1), abs(u - v)) >= radius
    ]

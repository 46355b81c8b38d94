import os
import math
import random
import logging
import multiprocessing as mp
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm


logger = logging.getLogger(__name__)

DEFAULT_SEED = 0xA27
THREADS_ENV = "ANGSPEC_THREADS"


@dataclass(frozen=True)
class Tolerances:
    herm: float = 1e-12
    count: float = 1e-10
    root: float = 1e-10
    match: float = 1e-8
    sep: float = 1e-9

    def sep_tol(self, c2):
        return self.sep * (1.0 + abs(c2))

    def herm_tol(self, scale):
        return self.herm * max(1.0, scale)


TOLS = Tolerances()


def seed_everything(seed=DEFAULT_SEED):
    """Seeds python and numpy global state and returns a fresh Generator."""
    random.seed(seed)
    np.random.seed(seed % 2**32)
    return np.random.default_rng(seed)


def worker_count(requested=None):
    # ANGSPEC_THREADS is a hard cap
    n = requested if requested else 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            logger.warning("ignoring non-integer %s=%r", THREADS_ENV, cap)
    return max(1, min(n, mp.cpu_count()))


def parallel_map(func, items, workers=1, desc=None, key=None):
    """Maps `func` over `items`, results sorted by `key` (defaults to input order).

    With more than one worker the items go through `Pool.imap_unordered`; the
    output order never depends on scheduling.
    """
    items = list(items)
    indexed = list(enumerate(items))
    disable = desc is None
    if workers <= 1 or len(items) <= 1:
        results = [(i, func(item)) for i, item in tqdm(indexed, desc=desc, disable=disable)]
    else:
        logger.info("Num workers = %d, Num items = %d", workers, len(items))
        with Pool(processes=workers) as pool:
            results = list(tqdm(pool.imap_unordered(_indexed_call, [(func, i, item) for i, item in indexed]),
                                total=len(items), desc=desc, disable=disable))
    if key is None:
        results.sort(key=lambda pair: pair[0])
    else:
        results.sort(key=lambda pair: key(pair[1]))
    return [res for _, res in results]


def _indexed_call(packed):
    func, i, item = packed
    return i, func(item)


def re_sqrt(r):
    # real part of the principal square root
    return math.sqrt(r) if r > 0.0 else 0.0


def random_unitary(rng, n):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def hermitian_part(a):
    return 0.5 * (a + a.conj().T)


def parse_int_range(text):
    """Parses `3`, `-5..4` or `1,2,5` into a list of ints."""
    text = str(text).strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        step = 1 if hi >= lo else -1
        return list(range(lo, hi + step, step))
    return [int(v) for v in text.split(",") if v.strip()]

"""
Seed handling.

All randomness flows from one explicit seed. Sub-streams are derived by index splitting, so
item i of an ensemble or property j of a verification run depends only on (seed, i) and never on
scheduling or worker count.
"""

import numpy as np

SeedLike = int | np.random.SeedSequence | np.random.Generator


def as_generator(seed: SeedLike) -> np.random.Generator:
    """Return a numpy Generator for a seed, sequence or existing generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def child_sequence(seed: int, index: int) -> np.random.SeedSequence:
    """The index-th independent sub-stream of a run seed."""
    return np.random.SeedSequence(seed, spawn_key=(index,))


def child_seed(seed: int, index: int) -> int:
    """
    A reproducible 64-bit integer seed for the index-th sub-stream.

    Printed in reports so a single failing stream can be replayed with ``default_rng``.
    """
    return int(child_sequence(seed, index).generate_state(1, dtype=np.uint64)[0])

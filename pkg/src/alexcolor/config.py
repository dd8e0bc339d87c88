"""Default budgets and probe settings."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    minors: int = 100_000          # symbolic or specialized determinants per ideal query
    brute_candidates: int = 3 ** 10  # functions A(D) -> target tried by the oracle
    enumerate_limit: int = 1000    # colorings listed by enumerate_colorings


@dataclass(frozen=True)
class ProbeConfig:
    """Specializations used to compare ideals by their images."""

    primes: tuple = (2, 3, 5, 7, 11)


BUDGETS = Budgets()
PROBES = ProbeConfig()

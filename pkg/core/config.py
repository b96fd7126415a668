import logging
from dataclasses import dataclass

import numpy as np
from sympy import isprime

from core.errors import DomainError
from linalg.fields import field_from_selector

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647
DEFAULT_SAMPLES = 3
ESCALATED_SAMPLES = 10
DEFAULT_BUDGET = 10 ** 6
DEFAULT_RATIONAL_BOUND = 100
OUTPUT_FORMATS = ("json", "csv", "tex", "text")
FIELD_CHOICES = ("prime", "rational", "sqrt5")


@dataclass
class RunConfig:
    field: str = "prime"
    prime: int = DEFAULT_PRIME
    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    escalated_samples: int = ESCALATED_SAMPLES
    output_format: str = "json"
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    rational_bound: int = DEFAULT_RATIONAL_BOUND

    def __post_init__(self):
        if self.field not in FIELD_CHOICES:
            raise DomainError(f"unknown field selector {self.field!r}")
        if not isprime(self.prime):
            raise DomainError(f"--prime {self.prime} is not a prime")
        if self.samples < 1:
            raise DomainError(f"samples must be >= 1, got {self.samples}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(f"unknown output format {self.output_format!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError(f"seed must fit in 64 bits, got {self.seed}")

    @staticmethod
    def from_namespace(args) -> "RunConfig":
        field_name = args.field
        # явный --prime без --field означает поле GF(p)
        if field_name is None:
            field_name = "prime"
        config = RunConfig(
            field=field_name,
            prime=args.prime,
            seed=args.seed,
            samples=args.samples,
            output_format=args.format,
            jobs=args.jobs,
            budget=args.budget,
        )
        logger.debug("run config: %s", config)
        return config

    def make_field(self):
        return field_from_selector(self.field, self.prime, self.rational_bound)

    def seed_sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.seed)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed_sequence())

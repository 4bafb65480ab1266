"""
Run configuration for the verification driver.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from borcherds.params import DataRange, ValidationError, validate_data_range, validate_type, yield_errors

PI_MODES = ('generic', 'plus', 'minus')

_POSITIVE = DataRange(1, None)
_NON_NEGATIVE = DataRange(0, None)


@dataclass(frozen=True)
class RunConfig:
    """Options of one verification run"""
    datum_path: Optional[str] = None
    suites: Optional[tuple[str, ...]] = None
    max_height: int = 4
    order: int = 12
    pi_mode: str = 'generic'
    seed: int = 0
    jobs: int = 1
    out: Optional[str] = None
    degree_bound: int = 4
    samples: int = 50
    only: Optional[str] = None

    def __post_init__(self):
        if self.suites is not None:
            object.__setattr__(self, 'suites', tuple(self.suites))
        for error in self.validate():
            raise error

    def validate(self) -> Iterator[ValidationError]:
        """Check bounds, the π mode and the suite names."""
        yield from yield_errors([
            validate_data_range(self.max_height, 'max_height', _POSITIVE),
            validate_data_range(self.order, 'order', _NON_NEGATIVE),
            validate_data_range(self.jobs, 'jobs', _POSITIVE),
            validate_data_range(self.degree_bound, 'degree_bound', _NON_NEGATIVE),
            validate_data_range(self.samples, 'samples', _NON_NEGATIVE),
            validate_type(self.seed, 'seed', int),
        ])
        if self.pi_mode not in PI_MODES:
            yield ValidationError('pi_mode', f"must be one of {', '.join(PI_MODES)}")

        # suites register themselves on import
        from src.core.suites import suite_ids
        known = suite_ids()
        for name in self.suites or ():
            if name not in known:
                yield ValidationError('suites', f"unknown suite {name!r}")

    @property
    def selected_suites(self) -> tuple[str, ...]:
        """The suites to run; None selects every registered suite."""
        from src.core.suites import suite_ids
        return suite_ids() if self.suites is None else self.suites

    @property
    def pi_sign(self) -> Optional[int]:
        """None for generic π, otherwise the specialization ±1."""
        return {'generic': None, 'plus': 1, 'minus': -1}[self.pi_mode]

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """Copy with every override that is not None applied."""
        values = {k: v for k, v in overrides.items() if v is not None}
        if values.get('suites') is not None:
            values['suites'] = tuple(values['suites'])
        return dataclasses.replace(self, **values)

    @classmethod
    def from_mapping(cls, values: dict[str, Any]) -> RunConfig:
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(values) - names)
        if unknown:
            raise ValueError(f"unknown run option(s): {', '.join(unknown)}")
        return cls(**values)

    def to_json(self) -> dict[str, Any]:
        result = dataclasses.asdict(self)
        result['suites'] = None if self.suites is None else list(self.suites)
        return result

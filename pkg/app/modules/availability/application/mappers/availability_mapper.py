from decimal import Decimal
from fractions import Fraction

from app.modules.availability.application.dtos.availability_dtos import AvailabilityReportDTO
from app.modules.availability.domain.services.analytic import CommitteeFailure
from app.modules.availability.domain.services.monte_carlo import WilsonInterval
from app.shared.domain.value_objects.rational_vo import render_decimal, render_rational


class AvailabilityMapper:

    @staticmethod
    def to_report_dto(
        *,
        level: int,
        n: int,
        p: Fraction,
        r: Fraction,
        sizes: tuple,
        trials: int,
        seed: int,
        mode: str,
        confidence: float,
        lower_bound: Decimal,
        product_form: Fraction,
        failure: CommitteeFailure,
        successes: int,
        interval: WilsonInterval,
    ) -> AvailabilityReportDTO:
        return AvailabilityReportDTO(
            level=level,
            n=n,
            p=render_rational(p),
            r=render_rational(r),
            committees=len(sizes),
            committee_size_min=min(sizes),
            trials=trials,
            seed=seed,
            mode=mode,
            confidence=confidence,
            analytic_lower_bound=render_decimal(lower_bound),
            analytic_lower_bound_digits=f"{lower_bound:.30g}",
            product_form=render_decimal(product_form),
            committee_failure_exact=render_decimal(failure.exact),
            committee_failure_bound=min(1.0, render_decimal(failure.bound)),
            mc_successes=successes,
            mc_estimate=render_decimal(Fraction(successes, trials)),
            mc_half_width=render_decimal(interval.half_width),
            wilson_low=render_decimal(interval.low),
            wilson_high=render_decimal(interval.high),
        )

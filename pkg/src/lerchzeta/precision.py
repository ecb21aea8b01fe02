"""Working-precision configuration and decimal serialization helpers.

All evaluators compute with guard digits above the requested decimal
precision P and report an absolute error bound alongside the value, so
the reported digits are meaningful rather than cosmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath as mp

ENV_PRECISION = "LERCHZETA_DPS"

DEFAULT_DPS = 40


def default_dps() -> int:
    """Default decimal precision, overridable via the environment."""
    raw = os.environ.get(ENV_PRECISION)
    if raw is None:
        return DEFAULT_DPS
    try:
        dps = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_PRECISION} must be an integer, got {raw!r}") from exc
    if dps < 20:
        raise ValueError(f"{ENV_PRECISION} must be >= 20, got {dps}")
    return dps


@dataclass(frozen=True)
class PrecisionConfig:
    """Evaluation budget: target precision plus truncation caps.

    dps            -- requested decimal digits P (>= 20)
    target_eps     -- absolute error goal, default 10^(5-P)
    series_cap     -- max number of terms any direct series may use
    em_max_k       -- max Euler-Maclaurin correction order (even)
    quad_maxdegree -- tanh-sinh quadrature degree cap
    """

    dps: int = DEFAULT_DPS
    target_eps: float | None = None
    series_cap: int = 200_000
    em_max_k: int = 120
    quad_maxdegree: int = 8

    def __post_init__(self):
        if self.dps < 20:
            raise ValueError(f"precision must be >= 20 digits, got {self.dps}")

    @property
    def eps(self) -> mp.mpf:
        """Target absolute error (>= 10 ulps at precision dps)."""
        if self.target_eps is not None:
            return mp.mpf(self.target_eps)
        return mp.mpf(10) ** (5 - self.dps)

    @property
    def guard_dps(self) -> int:
        """Internal working digits: P plus guard digits for rounding."""
        return self.dps + 15

    def work(self):
        """Context manager switching mpmath to the internal precision."""
        return mp.workdps(self.guard_dps)


def make_config(dps: int | None = None, **kw) -> PrecisionConfig:
    return PrecisionConfig(dps=dps if dps is not None else default_dps(), **kw)


def _digits_for(x, dps: int) -> int:
    # enough decimal digits to identify the mpf bit-exactly
    mantissa_bits = x._mpf_[3] if hasattr(x, "_mpf_") else 0
    return max(dps + 8, int(mantissa_bits * 0.30103) + 4)


def mpf_to_str(x, dps: int | None = None) -> str:
    """Decimal string carrying the value's full precision (round-trips
    bit-exactly through str_to_mpc at the same dps).

    Conversion runs above the target precision so an ambient low-
    precision context can never corrupt the digits.
    """
    if dps is None:
        dps = mp.mp.dps
    with mp.workdps(dps + 15):
        x = mp.mpf(x) if not hasattr(x, "_mpf_") else x
    digits = _digits_for(x, dps)
    with mp.workdps(digits + 6):
        return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def mpc_to_str(z, dps: int | None = None) -> str:
    if dps is None:
        dps = mp.mp.dps
    with mp.workdps(dps + 15):
        z = mp.mpc(z)
    re = mpf_to_str(z.real, dps)
    im = mpf_to_str(z.imag, dps)
    sign = "+" if not im.startswith("-") else ""
    return f"{re}{sign}{im}j"


def str_to_mpc(s: str, dps: int | None = None) -> mp.mpc:
    """Parse a report decimal string at enough precision to recover it."""
    if dps is None:
        dps = mp.mp.dps
    with mp.workdps(max(dps + 15, len(s) + 10)):
        return mp.mpc(*_split_complex(s))


def _split_complex(s: str):
    s = s.strip()
    if not s.endswith("j"):
        return (mp.mpf(s), mp.mpf(0))
    body = s[:-1]
    # find the split point: last +/- not at position 0 and not part of an exponent
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            return (mp.mpf(body[:i]), mp.mpf(body[i:]))
    return (mp.mpf(0), mp.mpf(body))

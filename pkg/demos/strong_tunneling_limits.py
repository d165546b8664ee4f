"""Approach to the strong-tunneling closed forms.

For each family and regime, the largest gap between the exact concurrence and
its asymptotic expression shrinks as the dominant amplitude grows.
"""

import math

from bhdimer.families import FamilyKind, Regime, RegimeLimit, limit_concurrence, regime_deviation

amps = (10, 1e2, 1e3, 1e4)
print(f"{'family/regime':<20}" + "".join(f"{a:>10.0e}" for a in amps))
for kind in FamilyKind:
    for regime in Regime:
        devs = [regime_deviation(kind, regime, 1.0, a) for a in amps]
        print(f"{kind.value + '/' + regime.value:<20}" + "".join(f"{v:10.1e}" for v in devs))

slow_k = RegimeLimit(FamilyKind.SLOW, Regime.STRONG_K, 1.0)
print(f"\nslow family, strong pair tunneling: C = {limit_concurrence(slow_k, 0.0):.4f} "
      f"(= sqrt(15)/4 = {math.sqrt(15) / 4:.4f}) at all times")

"""Autocorrelation spectra: brute force versus the closed form.

The interleaved sequence is optimal with respect to autocorrelation
magnitude: every out-of-phase value lies in {0, 4, -4}. The closed form
predicts each value from (tau mod 4, tau div 4) and the quadratic character
of a shifted residue; the only subtlety is the sign b = +-1 from the quartic
decomposition of p and a global sign on the odd blocks that tracks whether
w(0) = w(1).
"""

from twoadic import (
    ADMISSIBLE_W,
    autocorrelation,
    closed_form_spectrum,
    construction_params,
    dhl_sequence,
    su_sequence,
)

# the period-p building blocks have two-valued out-of-phase autocorrelation
dhl = dhl_sequence(13, 2, 1)
print("DHL out-of-phase values:", sorted(autocorrelation(dhl).out_of_phase()))

for w in ADMISSIBLE_W:
    params = construction_params(13, 2, w)
    s = su_sequence(params)
    brute = autocorrelation(s)
    closed = closed_form_spectrum(params)
    tag = "".join(map(str, w))
    print(f"w={tag}: histogram {brute.histogram()}  closed form matches: "
          f"{brute == closed}")

params = construction_params(13, 2, (0, 1, 0, 1))
spectrum = autocorrelation(su_sequence(params))
print("\nfirst 16 shifts (tau: AC):",
      {tau: spectrum.values[tau] for tau in range(16)})
print("spectrum is symmetric: AC(tau) = AC(N - tau) =",
      all(spectrum.values[t] == spectrum.values[52 - t] for t in range(1, 52)))

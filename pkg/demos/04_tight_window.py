"""A smooth compactly supported window whose translates partition unity.

The window rises through sin((pi/2) nu(.)), sits flat, and falls through the
matching cosine, so adjacent translates by q0 satisfy sin^2 + cos^2 = 1 on
their overlap and sum_k |g(x - k q0)|^2 = 1/q0 exactly. Modulating and
translating it produces a tight family with frame constant 2*pi/(p0*q0),
verified here by quadrature on sampled signals.
"""

import math

import numpy as np

from framecalc import (
    demo_gabor_params,
    gabor_probe_signals,
    sample_grid,
    tightness_check,
    window_g,
)


def main():
    params = demo_gabor_params()
    print(f"p0 = {params.p0}, q0 = {params.q0}")
    print(f"support radius pi/p0 = {math.pi / params.p0:.6f}")
    print(f"transition width 2*pi/p0 - q0 = {params.transition_width:.6f}")
    print(f"tight-frame constant 2*pi/(p0*q0) = {params.tight_constant:.6f}")

    xs = np.linspace(-4.0, 4.0, 9)
    print("\nwindow samples on [-4, 4]:")
    for x, value in zip(xs, window_g(xs, params)):
        print(f"  g({x:+.1f}) = {value:.6f}")

    grid = np.linspace(-5.0 * params.q0, 5.0 * params.q0, 10_000)
    partition = np.zeros_like(grid)
    for k in range(-8, 9):
        partition += window_g(grid - k * params.q0, params) ** 2
    deviation = np.max(np.abs(partition - 1.0 / params.q0))
    print(f"\npartition of unity: max |sum_k g(x-k q0)^2 - 1/q0| = {deviation:.2e}")

    print("\ntightness of the modulated-translate family on sampled signals:")
    window = window_g(sample_grid(params), params)
    report = tightness_check(window, params)
    print(f"  the window itself: ratio {report.ratio:.12f}, "
          f"relative error {report.relative_error:.2e}")
    for k, signal in enumerate(gabor_probe_signals(params, count=3, seed=2)):
        report = tightness_check(signal, params)
        print(f"  probe {k}: ratio {report.ratio:.12f}, "
              f"relative error {report.relative_error:.2e}")

    gain = math.sqrt(1.0 / params.tight_constant)
    rescaled = tightness_check(window, params, window_gain=gain)
    print(f"\nrescaling the window by sqrt(p0*q0/(2*pi)) makes the family "
          f"Parseval: ratio = {rescaled.ratio:.12f}")


if __name__ == "__main__":
    main()

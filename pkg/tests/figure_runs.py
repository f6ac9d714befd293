"""Canonical CLI invocations for the checked-in figure outputs.

Golden files are produced once by tests/make_golden.py from a verified
build; the CLI tests replay the same argument lists and require
byte-identical output.
"""

FIGURE_RUNS = {
    "fig2": ["qca1", "--n", "32", "--steps", "64", "--theta", "pi/4", "--init", "pair:15,16"],
    "fig3": ["qca1", "--n", "32", "--steps", "64", "--theta", "pi/4", "--init", "delta:0"],
    "fig8_rho_pi6": [
        "qca2", "--n", "32", "--steps", "64", "--theta", "pi/4", "--rho", "pi/6",
        "--init", "delta:0:right",
    ],
    "fig8_rho_pi3": [
        "qca2", "--n", "32", "--steps", "64", "--theta", "pi/4", "--rho", "pi/3",
        "--init", "delta:0:right",
    ],
    "fig9_two_particle": [
        "qlga", "--n", "16", "--steps", "32", "--theta", "pi/4", "--alpha", "0",
        "--beta=-3*pi/4", "--init", "particles:4,11",
    ],
    "fig9_one_particle": [
        "qlga", "--n", "16", "--steps", "32", "--theta", "pi/4", "--alpha", "0",
        "--beta=-3*pi/4", "--init", "pair:4,11",
    ],
}

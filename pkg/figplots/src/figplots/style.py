"""Every styling constant in one place.

Visual choices only; nothing here may touch the data. Colors are the
Okabe-Ito colorblind-safe set.
"""

COLORS = ["#0072B2", "#D55E00", "#009E73", "#CC79A7",
          "#E69F00", "#56B4E9", "#000000"]
LINE_STYLES = ["-", "--", "-.", ":"]
LINE_WIDTH = 1.6

PEAK_MARKER = "o"
PEAK_MARKER_SIZE = 42.0
PEAK_MARKER_EDGE = "#333333"

PANEL_WIDTH = 4.6       # inches per panel
PANEL_HEIGHT = 3.4
DPI = 150

FONT_SIZE = 10
LEGEND_SIZE = 9
GRID_ALPHA = 0.25

SVG_HASH_SALT = "figplots"  # pins matplotlib's generated SVG ids

# legend labels for the quantity columns the sweep tool emits
COLUMN_LABELS = {
    "qfi_omega": r"$F_{\omega}$",
    "qfi_omegas": r"$F_{\omega_s}$",
    "hss_omega": r"$\mathrm{HSS}_{\omega}$",
    "hss_omegas": r"$\mathrm{HSS}_{\omega_s}$",
    "chi3_abs": r"$|\chi^{(3)}|$",
    "chi3_re": r"$\mathrm{Re}[\chi^{(3)}]$",
    "chi3_im": r"$\mathrm{Im}[\chi^{(3)}]$",
    "chi1_abs": r"$|\chi^{(1)}|$",
    "chi1_re": r"$\mathrm{Re}[\chi^{(1)}]$",
    "chi1_im": r"$\mathrm{Im}[\chi^{(1)}]$",
    "n0": r"$n_0$",
    "alpha0": r"$\alpha_0$",
}

AXIS_LABELS = {
    "omega": r"$\omega$",
    "omega_s": r"$\omega_s$",
    "omega_ba": r"$\omega_{ba}$",
    "omega_ca": r"$\omega_{ca}$",
    "omega_dc": r"$\omega_{dc}$",
    "omega_da": r"$\omega_{da}$",
    "rabi": r"$\Omega$",
    "rabi_s": r"$\Omega_s$",
    "rabi_ba": r"$\Omega_{ba}$",
    "rabi_cb": r"$\Omega_{cb}$",
    "rabi_dc": r"$\Omega_{dc}$",
    "gamma_c": r"$\gamma_c$",
    "gamma_d": r"$\gamma_d$",
}


def label_for_column(name: str) -> str:
    base = name[:-5] if name.endswith("_norm") else name
    label = COLUMN_LABELS.get(base, base)
    if name.endswith("_norm"):
        return label + " (norm.)"
    return label


def label_for_axis(name: str) -> str:
    return AXIS_LABELS.get(name, name)

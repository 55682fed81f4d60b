"""Tiny optional plotting helper shared by the demos."""

from pathlib import Path

OUT = Path(__file__).resolve().parent / "out"


def save_lines(name, x, series, xlabel="gamma t", ylabel=""):
    """Plot ``series`` (label -> y) against ``x`` if matplotlib is around."""
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("(matplotlib not installed, skipping figure)")
        return None
    OUT.mkdir(exist_ok=True)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for label, y in series.items():
        ax.plot(x, y, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = OUT / f"{name}.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    print(f"figure written to {path}")
    return path

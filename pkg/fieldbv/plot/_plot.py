import matplotlib.pyplot as plt
import numpy as np
from .._constants import STAGES

__all__ = ['plot_runtime_breakdown']


def _configure_figure(fig_width, fig_height, dpi):
    fig = plt.figure(figsize=(fig_width, fig_height), dpi=dpi)
    ax = plt.gca()
    return fig, ax


def plot_runtime_breakdown(verdicts, labels=None, figsize=(10, 6),
                           dpi=100, filename=None, **kwargs):
    r"""
    Stacked bar chart of the time spent per pipeline stage.

    Parameters
    ----------
    verdicts : list of :class:`fieldbv.Verdict`
        One bar per verdict, one segment per stage
        (``to_nat``, ``range_analysis``, ``to_bv``, ``bitblast``).
    labels : list of str, optional
        Bar labels. Defaults to the problem names.
    figsize : tuple, default=(10, 6)
        Figure size in inches. Must be a tuple in the format
        (WIDTH, HEIGHT).
    dpi : float, default=100
        Figure resolution in dots-per-inch.
    filename : str, optional
        Save the figure instead of showing it.
    **kwargs
        Passed to :obj:`matplotlib.axes.Axes.bar`.

    Returns
    -------
    :class:`matplotlib.axes.Axes`

    See Also
    --------
    fieldbv.run_pipeline
    """
    if len(figsize) == 2:
        fig_width, fig_height = figsize
    else:
        raise ValueError(
            'figsize must be a tuple in the format (WIDTH, HEIGHT)'
        )
    if labels is None:
        labels = [v.name or str(i) for i, v in enumerate(verdicts)]
    if len(labels) != len(verdicts):
        raise ValueError('Expected one label per verdict.')

    times = np.array([[v.timing.get(s, 0.0) for s in STAGES]
                      for v in verdicts], dtype=float).reshape(-1,
                                                               len(STAGES))
    fig, ax = _configure_figure(fig_width, fig_height, dpi)
    x = np.arange(len(verdicts))
    bottom = np.zeros(len(verdicts))
    for j, stage in enumerate(STAGES):
        ax.bar(x, times[:, j], bottom=bottom, label=stage, **kwargs)
        bottom += times[:, j]

    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=45, ha='right')
    ax.set_ylabel('Time (s)', fontsize=18)
    ax.tick_params(length=7, labelsize=14)
    ax.legend()
    fig.tight_layout()

    if filename is None:
        plt.show()
    else:
        plt.savefig(filename)
    return ax

# src/utils/figures.py
"""
EXPORT DES FIGURES DU RAPPORT (PNG)
"""

import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from utils.config import config
from utils.helpers import get_logger


class FigureExporter:
    """Écrit les figures matplotlib dans <sortie>/figures, une par appel."""

    def __init__(self, output_dir, dpi=100):
        self.output_dir = os.path.join(output_dir, config.FIGURES_DIR)
        self.dpi = dpi
        self.written = []
        self.logger = get_logger("report")

    def __enter__(self):
        os.makedirs(self.output_dir, exist_ok=True)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        plt.close('all')

    def save(self, fig, filename):
        path = os.path.join(self.output_dir, filename)
        # métadonnées retirées: même entrée, mêmes octets
        fig.savefig(path, dpi=self.dpi, metadata={'Software': None})
        plt.close(fig)
        self.written.append(filename)
        self.logger.info("figure écrite: %s", path)
        return path

    def plot_cdf(self, ranks, fractions, threshold, filename='cdf.png'):
        fig, ax = plt.subplots(figsize=(8, 5))
        ax.step(ranks, fractions, where='post', color='steelblue')
        ax.axhline(threshold, color='firebrick', linestyle='--', linewidth=1)
        ax.set_xlabel('AS (rang de fréquence)')
        ax.set_ylabel('fraction cumulée des chemins')
        ax.set_ylim(0, 1.02)
        ax.grid(True, alpha=0.3)
        return self.save(fig, filename)

    def plot_country_coverage(self, per_country, filename='coverage_by_country.png'):
        codes = sorted(per_country)
        values = [per_country[cc] for cc in codes]
        fig, ax = plt.subplots(figsize=(max(6, len(codes) * 0.5), 5))
        ax.bar(codes, values, color='seagreen')
        ax.set_ylabel("fraction des chemins interceptés")
        ax.set_ylim(0, 1.02)
        ax.tick_params(axis='x', rotation=90)
        return self.save(fig, filename)

    def plot_router_curves(self, curves, threshold, filename='router_coverage.png'):
        """curves: ASN -> fractions cumulées de traces couvertes."""
        fig, ax = plt.subplots(figsize=(8, 5))
        for asn in sorted(curves):
            fractions = curves[asn]
            ax.plot(range(1, len(fractions) + 1), fractions, label=f"AS{asn}")
        ax.axhline(threshold, color='firebrick', linestyle='--', linewidth=1)
        ax.set_xscale('log')
        ax.set_xlabel('routeurs (ordre de fréquence)')
        ax.set_ylabel('fraction des traces couvertes')
        if curves:
            ax.legend(fontsize='small')
        return self.save(fig, filename)

    def plot_rank_scatter(self, frequency_ranks, cone_ranks, filename='rank_comparison.png'):
        fig, ax = plt.subplots(figsize=(6, 6))
        ax.scatter(frequency_ranks, cone_ranks, s=12, color='darkorange')
        ax.set_xlabel('rang par fréquence')
        ax.set_ylabel('rang par cône client')
        return self.save(fig, filename)

    def plot_stability(self, sizes, ks, filename='stability.png'):
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.plot(sizes, ks, marker='o')
        ax.set_xlabel('destinations')
        ax.set_ylabel('AS clés requis')
        ax.grid(True, alpha=0.3)
        return self.save(fig, filename)

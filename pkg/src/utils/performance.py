# src/utils/performance.py
"""
ANALYSE DE PERFORMANCE PAR ÉTAPE
"""

import os
import time
from contextlib import contextmanager

import psutil

from utils.helpers import get_logger


class PerformanceMonitor:
    """Moniteur de performance système et application (temps, mémoire)."""

    def __init__(self):
        self.process = psutil.Process(os.getpid())
        self.logger = get_logger("perf")
        self.stages = {}

    def get_metrics(self):
        """Retourne les métriques actuelles."""
        return {
            'memory_mb': self.process.memory_info().rss / 1024 / 1024,
            'cpu_percent': self.process.cpu_percent(),
        }

    @contextmanager
    def stage(self, name):
        """Mesure une étape; les valeurs sont journalisées, jamais écrites sur disque."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            metrics = self.get_metrics()
            self.stages[name] = {'seconds': elapsed, **metrics}
            self.logger.info(
                "PERF %s: %.2f s | Mem: %.1f MB", name, elapsed, metrics['memory_mb']
            )

    def log_status(self):
        """Affiche le total des étapes mesurées."""
        total = sum(stage['seconds'] for stage in self.stages.values())
        self.logger.info("PERF total: %.2f s sur %d étapes", total, len(self.stages))

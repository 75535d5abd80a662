# src/analysis/cost.py
"""
COÛT DE DÉPLOIEMENT DES ROUTEURS LEURRES
"""

from utils.config import config


def cost_estimate(total_routers, unit_cost_usd=config.UNIT_COST_USD):
    if total_routers < 0 or unit_cost_usd < 0:
        raise ValueError("nombre de routeurs et coût unitaire doivent être >= 0")
    return total_routers * unit_cost_usd


def cost_report(rollup, unit_cost_usd=config.UNIT_COST_USD):
    total = rollup['total_required']
    return {
        'total_routers': total,
        'unit_cost_usd': unit_cost_usd,
        'total_cost_usd': cost_estimate(total, unit_cost_usd),
        'per_country_usd': {cc: cost_estimate(count, unit_cost_usd)
                            for cc, count in rollup['per_country'].items()},
    }

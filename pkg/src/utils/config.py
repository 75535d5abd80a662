# src/utils/config.py
"""
CONFIGURATION GLOBALE - VALEURS PAR DÉFAUT DU PIPELINE
"""


class GlobalConfig:
    # ========== SEUILS DE SÉLECTION ==========
    THRESHOLD_AS = 0.9        # fraction des chemins à intercepter
    THRESHOLD_ROUTER = 0.9    # fraction des traces à intercepter
    UNIT_COST_USD = 885_000   # coût d'un routeur leurre

    # ========== INFÉRENCE / TOPOLOGIE ==========
    ENUMERATION_MAX_VERTICES = 16
    AS_TRANS = 23456
    ASN_MAX = 2**32 - 1

    # ========== ANALYSES ==========
    CDF_TOP_N = 50
    CONE_BYPASS_TOP_N = 10
    RANK_COMPARISON_TOP_N = 100
    STABILITY_STEPS = (10, 30, 50, 70, 100)
    UNKNOWN_COUNTRY = "??"

    # ========== GÉNÉRATEUR SYNTHÉTIQUE ==========
    SYNTH_SEED = 7
    SYNTH_AS_COUNT = 200
    SYNTH_TIER1 = 6
    SYNTH_TIER2_FRACTION = 0.2
    SYNTH_PEERING_PROB = 0.15
    SYNTH_MULTIHOMING_PROB = 0.35
    SYNTH_PREFIXES = 10
    SYNTH_VANTAGE_POINTS = 15
    SYNTH_TRACES = 2000
    SYNTH_GAP_PROB = 0.03
    SYNTH_ALIAS_PROB = 0.3
    SYNTH_COUNTRIES = ('US', 'DE', 'SE', 'JP', 'GB', 'FR', 'NL', 'BR',
                       'CN', 'RU', 'IR', 'IN', 'UA', 'ES', 'HK', 'MU')
    SYNTH_CENSORS = ('CN', 'RU', 'IR')

    # ========== FICHIERS DE SORTIE ==========
    PATHS_FILE = "paths.txt"
    INFERENCE_STATS_FILE = "inference_stats.json"
    PLACEMENT_FILE = "placement.json"
    RANKING_FILE = "ranking.csv"
    CDF_FILE = "cdf.csv"
    STABILITY_FILE = "stability.csv"
    VALIDATION_FILE = "validation.json"
    ROUTERS_FILE = "routers_{asn}.csv"
    ROLLUP_FILE = "placement_rollup.json"
    COLLATERAL_FILE = "collateral.csv"
    CONE_BYPASS_FILE = "cone_bypass.csv"
    RANK_COMPARISON_FILE = "rank_comparison.csv"
    SPEARMAN_FILE = "spearman.json"
    COST_FILE = "cost.json"
    SUMMARY_FILE = "summary.json"
    MANIFEST_FILE = "manifest.json"
    RUN_CONFIG_FILE = "run.conf"
    FIGURES_DIR = "figures"
    DEFAULT_OUTPUT_DIR = "outputs/"

    # ========== JOURNALISATION ==========
    LOGGER_NAME = "DecoyPlace"
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


# Instance globale
config = GlobalConfig()

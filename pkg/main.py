# decoy_placement/main.py
"""
POINT D'ENTRÉE PRINCIPAL - LIGNE DE COMMANDE DU PIPELINE
"""

import argparse
import logging
import os
import sys

# Ajouter le dossier src au path Python
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from cli.commands import cmd_analyze, cmd_infer, cmd_place, cmd_routers, cmd_synth
from cli.report import cmd_report
from cli.run_config import RunConfig
from utils.exceptions import DecoyPlaceError
from utils.helpers import setup_logger
from utils.performance import PerformanceMonitor

COMMANDS = {
    'infer': cmd_infer,
    'place': cmd_place,
    'routers': cmd_routers,
    'analyze': cmd_analyze,
    'synth': cmd_synth,
    'report': cmd_report,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='decoy-place',
        description="Inférence de chemins AS et placement de routeurs leurres",
    )
    parser.add_argument('command', choices=sorted(COMMANDS))
    parser.add_argument('--config', help="fichier key=value (les options l'emportent)")
    parser.add_argument('--rib', action='append', help="dump RIB 'PREFIXE|AS AS AS' (répétable)")
    parser.add_argument('--rels', help="relations CAIDA 'A|B|code'")
    parser.add_argument('--prefixes', help="préfixes cibles")
    parser.add_argument('--countries', help="pays des AS 'ASN|CC'")
    parser.add_argument('--censors', help="codes des pays censeurs")
    parser.add_argument('--traces', help="traces 'SRC|DST|saut,saut'")
    parser.add_argument('--aliases', help="ensembles d'alias")
    parser.add_argument('--p2a', help="attribution 'PREFIXE|ASN'")
    parser.add_argument('--paths', help="fichier de chemins (défaut: <out>/paths.txt)")
    parser.add_argument('--validate-paths', dest='validate_paths',
                        help="second fichier de chemins pour la validation croisée")
    parser.add_argument('--threshold-as', dest='threshold_as', type=float)
    parser.add_argument('--threshold-router', dest='threshold_router', type=float)
    parser.add_argument('--unit-cost', dest='unit_cost', type=float)
    parser.add_argument('--out', help="répertoire de sortie")
    parser.add_argument('--seed', type=int)
    parser.add_argument('--asn', action='append', type=int, help="AS à analyser (répétable)")
    parser.add_argument('--verbose', action='store_true')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = setup_logger(level=logging.DEBUG if args.verbose else logging.INFO)
    overrides = {key: value for key, value in vars(args).items()
                 if key not in ('command', 'config', 'verbose')}
    monitor = PerformanceMonitor()
    try:
        run_config = RunConfig.from_sources(args.config, overrides)
        with monitor.stage(args.command):
            COMMANDS[args.command](run_config)
    except DecoyPlaceError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return exc.exit_code
    monitor.log_status()
    return 0


if __name__ == "__main__":
    sys.exit(main())

# run_pipeline.py
"""
Script pour lancer le pipeline complet sur un jeu synthétique:
synth -> infer -> place -> routers -> analyze -> report
"""

import io
import os
import sys

# Configurer l'encodage UTF-8 pour Windows
if sys.platform == 'win32':
    sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8', errors='replace')
    sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding='utf-8', errors='replace')

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from main import main

STAGES = ('infer', 'place', 'routers', 'analyze', 'report')


def run(output_dir='outputs/synthetic', seed='7'):
    code = main(['synth', '--out', output_dir, '--seed', seed])
    if code:
        return code
    run_conf = os.path.join(output_dir, 'run.conf')
    for command in STAGES:
        code = main([command, '--config', run_conf, '--out', output_dir])
        if code:
            print(f"[ERREUR] {command}: code de sortie {code}")
            return code
    print(f"[OK] pipeline terminé: {output_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(run(*sys.argv[1:3]))

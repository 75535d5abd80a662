# src/utils/helpers.py
"""
FONCTIONS UTILITAIRES ET AIDE
"""

import csv
import hashlib
import json
import logging
import os

from utils.config import config


def setup_logger(name=config.LOGGER_NAME, level=logging.INFO):
    """Configure le logger pour le projet."""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(config.LOG_FORMAT)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger


def get_logger(component):
    """Logger enfant du logger principal (ex: DecoyPlace.ingest)."""
    return logging.getLogger(f"{config.LOGGER_NAME}.{component}")


def iter_data_lines(lines):
    """Itère (numéro de ligne, contenu) en sautant lignes vides et commentaires '#'."""
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        yield line_no, line


def read_lines(path):
    """Lit un fichier texte UTF-8 et renvoie ses lignes."""
    with open(path, 'r', encoding='utf-8') as handle:
        return handle.read().splitlines()


def write_lines(path, lines):
    """Écrit des lignes terminées par LF (sortie déterministe)."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        for line in lines:
            handle.write(line + '\n')


def write_json(path, payload):
    """JSON trié et indenté, toujours identique pour une même entrée."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write('\n')


def read_json(path):
    with open(path, 'r', encoding='utf-8') as handle:
        return json.load(handle)


def write_csv(path, header, rows):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)


def read_csv(path):
    with open(path, 'r', encoding='utf-8', newline='') as handle:
        return list(csv.DictReader(handle))


def sha256_file(path):
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        for block in iter(lambda: handle.read(65536), b''):
            digest.update(block)
    return digest.hexdigest()


def format_fraction(value, digits=6):
    """Arrondi stable pour les CSV (None -> chaîne vide)."""
    if value is None:
        return ''
    return f"{value:.{digits}f}"

# src/cli/run_config.py
"""
CONFIGURATION D'UNE EXÉCUTION: DÉFAUTS < FICHIER key=value < OPTIONS
"""

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field, fields

from utils.config import config
from utils.exceptions import ConfigError, MissingInputError
from utils.helpers import iter_data_lines, read_lines, sha256_file

INPUT_KEYS = ('rib', 'rels', 'prefixes', 'countries', 'censors', 'traces',
              'aliases', 'p2a', 'paths', 'validate_paths')
NUMERIC_KEYS = ('threshold_as', 'threshold_router', 'unit_cost', 'seed')


@dataclass
class RunConfig:
    rib: list = field(default_factory=list)
    rels: str = None
    prefixes: str = None
    countries: str = None
    censors: str = None
    traces: str = None
    aliases: str = None
    p2a: str = None
    paths: str = None               # fichier de chemins relu par place/analyze
    validate_paths: str = None
    threshold_as: float = config.THRESHOLD_AS
    threshold_router: float = config.THRESHOLD_ROUTER
    unit_cost: float = config.UNIT_COST_USD
    out: str = config.DEFAULT_OUTPUT_DIR
    seed: int = config.SYNTH_SEED
    asn: list = field(default_factory=list)

    # ---------- construction ----------
    @classmethod
    def from_sources(cls, config_file=None, overrides=None):
        run_config = cls()
        if config_file:
            run_config.apply(load_config_file(config_file))
        if overrides:
            run_config.apply({key: value for key, value in overrides.items()
                              if value not in (None, [])})
        return run_config

    def apply(self, values):
        known = {item.name for item in fields(self)}
        for key, value in values.items():
            if key not in known:
                raise ConfigError(f"clé de configuration inconnue: {key}")
            setattr(self, key, _coerce(key, value))

    # ---------- validation ----------
    def validate(self, required=()):
        for name in ('threshold_as', 'threshold_router'):
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise ConfigError(f"{name} hors de ]0, 1]: {value}")
        if self.unit_cost < 0:
            raise ConfigError(f"coût unitaire négatif: {self.unit_cost}")
        for name in required:
            value = getattr(self, name)
            if not value:
                raise MissingInputError(f"entrée manquante: --{name.replace('_', '-')}")
        for path in self.input_files():
            if not os.path.isfile(path):
                raise MissingInputError(f"fichier introuvable: {path}")
        return self

    def input_files(self):
        paths = list(self.rib)
        paths.extend(getattr(self, key) for key in INPUT_KEYS
                     if key != 'rib' and getattr(self, key))
        return paths

    def output_path(self, filename):
        return os.path.join(self.out, filename)

    # ---------- empreinte ----------
    def config_hash(self):
        """Empreinte des réglages numériques et du contenu des entrées (jamais des chemins)."""
        payload = {key: getattr(self, key) for key in NUMERIC_KEYS}
        payload['asn'] = sorted(self.asn)
        payload['inputs'] = {
            key: ([sha256_file(path) for path in self.rib] if key == 'rib'
                  else sha256_file(getattr(self, key)) if getattr(self, key) else None)
            for key in INPUT_KEYS
        }
        canonical = json.dumps(payload, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def to_dict(self):
        return asdict(self)


def _coerce(key, value):
    if key in ('rib', 'asn'):
        if isinstance(value, str):
            value = [item.strip() for item in value.split(',') if item.strip()]
        value = list(value)
        if key == 'asn':
            try:
                return [int(item) for item in value]
            except ValueError:
                raise ConfigError(f"ASN invalide dans {value}")
        return value
    if key in ('threshold_as', 'threshold_router', 'unit_cost'):
        try:
            number = float(value)
        except ValueError:
            raise ConfigError(f"valeur numérique invalide pour {key}: {value}")
        if key == 'unit_cost' and number.is_integer():
            return int(number)
        return number
    if key == 'seed':
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"graine invalide: {value}")
    return value


def load_config_file(path):
    """Fichier 'cle = valeur', commentaires '#', listes séparées par des virgules."""
    if not os.path.isfile(path):
        raise MissingInputError(f"fichier de configuration introuvable: {path}")
    base = os.path.dirname(os.path.abspath(path))
    values = {}
    for line_no, line in iter_data_lines(read_lines(path)):
        key, sep, value = line.partition('=')
        if not sep:
            raise ConfigError(f"{path}:{line_no}: ligne sans '='")
        key, value = key.strip().replace('-', '_'), value.strip()
        if key in INPUT_KEYS:
            items = [item.strip() for item in value.split(',') if item.strip()]
            items = [item if os.path.isabs(item) else os.path.join(base, item) for item in items]
            value = items if key == 'rib' else (items[0] if items else None)
        values[key] = value
    return values

# src/analysis/collateral.py
"""
DOMMAGES COLLATÉRAUX: CHEMINS ÉTRANGERS QUI TRAVERSENT UN PAYS CENSEUR
"""

import re
from dataclasses import dataclass

from utils.exceptions import UnknownCountryError
from utils.helpers import get_logger

logger = get_logger("analysis")

REENTRY = re.compile(r'IO+I')


@dataclass(frozen=True)
class CollateralReport:
    country: str
    paths_involving: int
    foreign_origin: int
    reentrant: int

    @property
    def fraction(self):
        """None quand aucun chemin ne touche le pays (résultat indéfini)."""
        if not self.paths_involving:
            return None
        return self.foreign_origin / self.paths_involving

    @property
    def undefined(self):
        return self.paths_involving == 0

    def to_dict(self):
        fraction = self.fraction
        return {
            'country': self.country,
            'paths_involving': self.paths_involving,
            'foreign_origin': self.foreign_origin,
            'fraction': None if fraction is None else round(fraction, 6),
            'reentrant': self.reentrant,
            'undefined': self.undefined,
        }


def membership_tokens(hops, countries, country_code):
    """I = AS du pays, O = AS d'un autre pays connu, U = pays inconnu."""
    tokens = []
    for asn in hops:
        cc = countries.country_of(asn)
        if cc is None:
            tokens.append('U')
        elif cc == country_code:
            tokens.append('I')
        else:
            tokens.append('O')
    return ''.join(tokens)


def collateral_damage(corpus, countries, country_code):
    """Chemins touchant `country_code` dont l'origine est hors du pays.

    Un chemin est réentrant s'il sort du pays puis y revient (I O+ I);
    un AS de pays inconnu interrompt le motif.
    """
    if country_code not in countries.known_codes:
        raise UnknownCountryError(f"code pays inconnu: {country_code}")
    involving = foreign = reentrant = 0
    for path in corpus.iter_paths():
        tokens = membership_tokens(path.hops, countries, country_code)
        if 'I' not in tokens:
            continue
        involving += 1
        if tokens[0] != 'I':
            foreign += 1
        if REENTRY.search(tokens):
            reentrant += 1
    report = CollateralReport(country=country_code, paths_involving=involving,
                              foreign_origin=foreign, reentrant=reentrant)
    if report.undefined:
        logger.warning("%s: aucun chemin ne traverse ce pays, fraction indéfinie", country_code)
    return report


def collateral_rows(reports):
    rows = []
    for report in reports:
        fraction = report.fraction
        rows.append([
            report.country, report.paths_involving, report.foreign_origin,
            '' if fraction is None else f"{fraction:.6f}",
            report.reentrant, int(report.undefined),
        ])
    return rows

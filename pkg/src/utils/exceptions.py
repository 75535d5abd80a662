# src/utils/exceptions.py
"""
EXCEPTIONS DU PIPELINE ET CODES DE SORTIE
"""


class DecoyPlaceError(Exception):
    """Erreur de base; exit_code est renvoyé par la ligne de commande."""
    exit_code = 1


class MissingInputError(DecoyPlaceError):
    exit_code = 2


class ConfigError(DecoyPlaceError):
    exit_code = 2


class ParseHardError(DecoyPlaceError):
    exit_code = 3


class RelationshipConflictError(ParseHardError):
    """Deux lignes donnent des étiquettes différentes pour la même paire d'AS."""

    def __init__(self, pair, first_line, second_line):
        self.pair = pair
        self.first_line = first_line
        self.second_line = second_line
        super().__init__(
            f"relation contradictoire pour AS{pair[0]}-AS{pair[1]}: "
            f"lignes {first_line} et {second_line}"
        )


class AliasConflictError(ParseHardError):
    def __init__(self, ip, first_line, second_line):
        self.ip = ip
        super().__init__(
            f"l'adresse {ip} apparaît dans deux ensembles d'alias "
            f"(lignes {first_line} et {second_line})"
        )


class PrefixMapConflictError(ParseHardError):
    def __init__(self, prefix, first_asn, second_asn):
        self.prefix = prefix
        super().__init__(
            f"préfixe {prefix} attribué à AS{first_asn} et AS{second_asn}"
        )


class EmptyCorpusError(DecoyPlaceError):
    exit_code = 4


class NoTracesError(DecoyPlaceError):
    exit_code = 5


class EnumerationLimitError(DecoyPlaceError):
    pass


class UnknownAsError(DecoyPlaceError):
    pass


class UnknownCountryError(DecoyPlaceError):
    pass


class UndefinedCorrelationError(DecoyPlaceError):
    pass


class EmptyCandidatesError(DecoyPlaceError):
    pass

"""Built-in English function words and the copula entry.

Everything else about English (content words, names, plans) comes from
resource files. Other languages supply a complete pack of their own.
"""

from __future__ import annotations

ENGLISH_PACK = {
    "copula": "toBeVerb",
    "articles": {
        "def": "the",
        "indef": {"sg": "a"},
    },
    "pronouns": {
        "sg masculine": "he", "sg feminine": "she", "sg neuter": "it",
        "pl": "they",
        "gen sg masculine": "his", "gen sg feminine": "her", "gen sg neuter": "its",
        "gen pl": "their",
        "acc sg masculine": "him", "acc sg feminine": "her", "acc pl": "them",
    },
    "demonstrative": {"sg": "this", "pl": "these"},
    "words": {
        "and": "and",
        "or": "or",
        "not": "not",
        "kind_of": "a kind of",
        "identical_to": "identical to",
        "not_identical_to": "not identical to",
        "at_most": "at most",
        "at_least": "at least",
        "exactly": "exactly",
        "only": "only",
        "some": "at least some",
    },
    "numbers": ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
                "eleven", "twelve"],
    "serial_comma": True,
    "genitive_suffix": "'s",
    "a_an": True,
    # numbers are handled separately; word prefixes that take "a" despite an initial vowel, and "an" despite a consonant
    "a_exceptions": ["uni", "use", "usu", "uti", "eu", "one", "once", "ewe", "ure"],
    "an_exceptions": ["hour", "honest", "honor", "honour", "heir"],
    "complement_case": "nom",
}

ENGLISH_LEXICON = [
    {
        "id": "toBeVerb",
        "pos": "verb",
        "langs": {
            "en": {
                "forms": {
                    "base": "be",
                    "participle": "been",
                    "present sg": "is", "present pl": "are",
                    "past sg": "was", "past pl": "were",
                    "future": "will be",
                    "present negative sg": "is not", "present negative pl": "are not",
                    "past negative sg": "was not", "past negative pl": "were not",
                    "future negative": "will not be",
                }
            }
        },
    }
]

# skipped when guessing a counting noun from a property identifier ("madeFrom" has none)
FUNCTION_WORDS = frozenset(
    "a an the of in on at by for from to with into onto over under during as has have had is are was were be "
    "been being made used".split())

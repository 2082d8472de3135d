"""qcrystal: crystal combinatorics on words, shifted tableaux, and
signed unimodal factorizations of type-B reduced words.

The package provides

* the word crystal with even (bracketing) and odd operators,
* shifted tableau families (primed, signed primed, standard, hook-row
  and unimodal-row decomposition tableaux) with validators,
* semistandard shifted mixed insertion and its inverse,
* Kraskiewicz insertion, its primed variant, and their inverses,
* explicit crystal operators on primed tableaux and factorizations,
* a generic engine (components, axiom checks, DOT/JSON export),
* a verification harness and a command line front end.
"""

__version__ = "0.1.0"

"""chf-cli: Chekhov-Fock coordinates of dessins d'enfants."""

__version__ = "0.1.0"

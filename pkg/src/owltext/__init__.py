"""Multi-sentence descriptions of OWL individuals and classes."""

from .owl import OntologyModel, load_ontology, parse_ontology
from .pipeline import Description, Flags, ablation_ladder, describe
from .resources import ResourceSet, empty_resources, load_resources, load_resources_file

__all__ = ["OntologyModel", "load_ontology", "parse_ontology", "Description", "Flags", "ablation_ladder",
           "describe", "ResourceSet", "empty_resources", "load_resources", "load_resources_file"]

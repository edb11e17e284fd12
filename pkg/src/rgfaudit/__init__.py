"""Pattern avoidance in set partitions: enumeration, characterizations, statistics and audits."""

__version__ = "0.1.0"

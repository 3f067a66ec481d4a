"""cisgraphs - распознавание CIS, равностабильных и смежных классов графов."""

__version__ = "1.0.0"

# -*- coding: utf-8 -*-

"""The version of the package."""

version = "0.1.0"
full_revisionid = None


def get_versions():
    """The version information as a dictionary."""
    return {
        "version": version,
        "full-revisionid": full_revisionid,
        "dirty": False,
        "error": None,
        "date": None,
    }

"""
Command modules for the grouptype CLI.
"""

from .catalog_command import cmd_catalog
from .collide_command import cmd_collide
from .common import CommandContext, CommandResult
from .compare_command import cmd_compare
from .export_command import cmd_export
from .spectrum_command import cmd_spectrum
from .verify_command import cmd_verify

__all__ = [
    "CommandContext",
    "CommandResult",
    "cmd_catalog",
    "cmd_collide",
    "cmd_compare",
    "cmd_export",
    "cmd_spectrum",
    "cmd_verify",
]

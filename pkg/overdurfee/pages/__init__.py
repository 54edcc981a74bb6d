# Pages package initialization
from overdurfee.pages.home import display_home
from overdurfee.pages.dissection import display_dissection
from overdurfee.pages.fibers import display_fibers
from overdurfee.pages.about import display_about

__all__ = [
    'display_home',
    'display_dissection',
    'display_fibers',
    'display_about'
]

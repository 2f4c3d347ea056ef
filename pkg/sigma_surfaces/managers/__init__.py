from .search_manager import SearchManager

__all__ = ["SearchManager"]

from .models import Base, CatalogEntry, create_session_factory
from .db_manager import CatalogManager

__all__ = ["Base", "CatalogEntry", "create_session_factory", "CatalogManager"]

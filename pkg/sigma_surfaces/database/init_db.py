import logging

from sqlalchemy.exc import SQLAlchemyError

from sigma_surfaces.database.models import Base, create_session_factory
from sigma_surfaces.exceptions import CatalogStoreError

logger = logging.getLogger(__name__)


def init_database(database_url: str = None):
    """Initialize the catalog store by creating all tables"""
    try:
        engine, _ = create_session_factory(database_url)
        Base.metadata.create_all(engine)
        logger.info("Catalog tables created successfully")
        return engine
    except SQLAlchemyError as e:
        logger.error(f"Error creating catalog tables: {str(e)}")
        raise CatalogStoreError(f"Error creating catalog tables: {e}") from e


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    init_database()

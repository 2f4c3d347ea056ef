from sqlalchemy import (
    create_engine, Column, Integer, String, DateTime, JSON, Index
)
from sqlalchemy.orm import declarative_base, sessionmaker
from datetime import datetime, timezone
import logging

from ..config.loader import get_database_url

logger = logging.getLogger(__name__)

Base = declarative_base()


def _utcnow():
    return datetime.now(timezone.utc)


class CatalogEntry(Base):
    __tablename__ = 'catalog_entries'

    id = Column(Integer, primary_key=True)
    schema_version = Column(Integer, nullable=False)
    kind = Column(String(16), nullable=False)
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    grids = Column(JSON, nullable=False, default=list)
    payload = Column(JSON, nullable=False)
    created_at = Column(DateTime, default=_utcnow)

    __table_args__ = (
        Index('ix_catalog_kind_n', 'kind', 'n'),
    )

    def __repr__(self):
        return f"<CatalogEntry(kind='{self.kind}', n={self.n}, m={self.m}, grids={self.grids})>"


def create_session_factory(database_url: str = None):
    """Engine and session factory for the catalog store, tables created on first use"""
    url = database_url or get_database_url()
    engine = create_engine(url)
    Base.metadata.create_all(engine)
    logger.debug(f"Catalog store at {url}")
    return engine, sessionmaker(bind=engine)

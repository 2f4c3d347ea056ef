from typing import Iterable, List, Optional
import json
import logging

from sqlalchemy.exc import SQLAlchemyError

from .models import CatalogEntry, create_session_factory
from ..catalog.records import CatalogRecord
from ..exceptions import CatalogStoreError

logger = logging.getLogger(__name__)


class CatalogManager:
    def __init__(self, database_url: str = None):
        try:
            self.engine, Session = create_session_factory(database_url)
            self.session = Session()
        except SQLAlchemyError as e:
            logger.error(f"Cannot open catalog store: {str(e)}")
            raise CatalogStoreError(f"Cannot open catalog store: {e}") from e

    def store_records(self, records: Iterable[CatalogRecord]) -> List[int]:
        """Persist records and return their IDs"""
        try:
            entries = []
            for record in records:
                data = json.loads(record.model_dump_json())
                entry = CatalogEntry(
                    schema_version=record.schema_version,
                    kind=record.kind,
                    n=record.n,
                    m=record.m,
                    grids=data['grids'],
                    payload=data['payload'],
                )
                self.session.add(entry)
                entries.append(entry)
            self.session.commit()
            logger.info(f"Stored {len(entries)} catalog records")
            return [e.id for e in entries]
        except SQLAlchemyError as e:
            self.session.rollback()
            logger.error(f"Database error: {str(e)}")
            raise CatalogStoreError(f"Storing catalog records failed: {e}") from e

    def list_records(self, kind: Optional[str] = None, n: Optional[int] = None,
                     m: Optional[int] = None) -> List[CatalogRecord]:
        """Stored records in insertion order, optionally filtered"""
        try:
            query = self.session.query(CatalogEntry)
            if kind:
                query = query.filter(CatalogEntry.kind == kind)
            if n is not None:
                query = query.filter(CatalogEntry.n == n)
            if m is not None:
                query = query.filter(CatalogEntry.m == m)
            entries = query.order_by(CatalogEntry.id).all()
        except SQLAlchemyError as e:
            self.session.rollback()
            logger.error(f"Database error: {str(e)}")
            raise CatalogStoreError(f"Reading catalog records failed: {e}") from e
        return [self._to_record(e) for e in entries]

    def count(self, kind: Optional[str] = None) -> int:
        try:
            query = self.session.query(CatalogEntry)
            if kind:
                query = query.filter(CatalogEntry.kind == kind)
            return query.count()
        except SQLAlchemyError as e:
            self.session.rollback()
            logger.error(f"Database error: {str(e)}")
            raise CatalogStoreError(f"Counting catalog records failed: {e}") from e

    def clear(self, kind: Optional[str] = None) -> int:
        """Delete stored records and return how many were removed"""
        try:
            query = self.session.query(CatalogEntry)
            if kind:
                query = query.filter(CatalogEntry.kind == kind)
            removed = query.delete()
            self.session.commit()
            return removed
        except SQLAlchemyError as e:
            self.session.rollback()
            logger.error(f"Database error: {str(e)}")
            raise CatalogStoreError(f"Deleting catalog records failed: {e}") from e

    def close(self) -> None:
        self.session.close()
        self.engine.dispose()

    @staticmethod
    def _to_record(entry: CatalogEntry) -> CatalogRecord:
        return CatalogRecord.model_validate({
            'schema_version': entry.schema_version,
            'kind': entry.kind,
            'n': entry.n,
            'm': entry.m,
            'grids': [tuple(g) for g in entry.grids],
            'payload': entry.payload,
        })

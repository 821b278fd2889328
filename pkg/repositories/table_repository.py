import json
from typing import Any, Dict

from models.run import CsvTable
from repositories.base_repository import BaseRepository


class TableRepository(BaseRepository[CsvTable]):
    """Writes CSV tables (with '#' comment header) and text/JSON reports"""

    def get_collection_name(self) -> str:
        return "tables"

    def from_dict(self, data: Dict[str, Any]) -> CsvTable:
        return CsvTable(
            header=list(data['header']),
            rows=[[float(v) for v in row] for row in data.get('rows', [])],
            comments=list(data.get('comments', [])),
        )

    def load(self, path: str) -> CsvTable:
        comments, header, rows = [], None, []
        for line in self._load_data(path).splitlines():
            if line.startswith('#'):
                comments.append(line[1:].strip())
            elif header is None:
                header = line.split(',')
            elif line:
                rows.append(line.split(','))
        return self.from_dict({'header': header or [], 'rows': rows, 'comments': comments})

    def save(self, table: CsvTable, path: str) -> str:
        return self._save_data(path, table.to_text())

    def save_report(self, text: str, path: str) -> str:
        if not text.endswith('\n'):
            text += '\n'
        return self._save_data(path, text)

    def save_json(self, payload: Dict[str, Any], path: str) -> str:
        return self._save_data(path, json.dumps(payload, indent=2, sort_keys=True) + '\n')

"""
Запись и чтение записей моделирования в CSV.

Заголовок фиксирован, значения — десятичные строки с 17 значащими
цифрами, строки завершаются LF, кодировка UTF-8. Поля отключённого
наблюдателя записываются пустыми ячейками.
"""
import csv
import io
import logging
import sys
from typing import Iterable, List, Optional, Sequence, TextIO

import numpy as np

from core.exceptions import OutputError, ValidationError
from core.models import SampleRecord
from core.utils import format_float, parse_float
from geometry.types import UnitVector3

logger = logging.getLogger(__name__)

CSV_HEADER = [
    "t", "xi_x", "xi_y", "xi_z", "y_x", "y_y", "y_z", "outlier",
    "xihat_eqv_x", "xihat_eqv_y", "xihat_eqv_z",
    "xihat_naive_x", "xihat_naive_y", "xihat_naive_z",
    "angle_err_eqv", "angle_err_naive", "V", "Vdot",
]


def _vector_cells(v: Optional[UnitVector3]) -> List[str]:
    if v is None:
        return ["", "", ""]
    return [format_float(c) for c in v.v.tolist()]


def record_to_row(record: SampleRecord) -> List[str]:
    """Ячейки CSV для одной записи."""
    return ([format_float(record.t)]
            + _vector_cells(record.xi)
            + _vector_cells(record.y)
            + ["1" if record.outlier else "0"]
            + _vector_cells(record.xihat_eqv)
            + _vector_cells(record.xihat_naive)
            + [format_float(record.angle_err_eqv), format_float(record.angle_err_naive),
               format_float(record.V), format_float(record.Vdot)])


def write_csv_stream(records: Iterable[SampleRecord], stream: TextIO) -> int:
    """
    Пишет записи в открытый текстовый поток.

    Returns:
        Число записанных строк данных
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for record in records:
        writer.writerow(record_to_row(record))
        count += 1
    return count


def format_csv(records: Iterable[SampleRecord]) -> str:
    """CSV-представление записей в виде строки."""
    buffer = io.StringIO()
    write_csv_stream(records, buffer)
    return buffer.getvalue()


def write_csv(records: Sequence[SampleRecord], path: Optional[str]) -> None:
    """
    Записывает записи в файл CSV; при path = None или "-" — в stdout.

    Args:
        records: Записи моделирования
        path: Путь к файлу

    Raises:
        OutputError: При ошибке ввода-вывода
    """
    if path is None or path == "-":
        write_csv_stream(records, sys.stdout)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            count = write_csv_stream(records, f)
    except OSError as e:
        raise OutputError(f"cannot write CSV ({e.strerror})", path)
    logger.info(f"Wrote {count} records to {path}")


def _vector(cells: Sequence[str]) -> Optional[UnitVector3]:
    values = [parse_float(c) for c in cells]
    if all(v is None for v in values):
        return None
    return UnitVector3(np.array(values, dtype=np.float64))


def row_to_record(row: Sequence[str]) -> SampleRecord:
    """Обратное к record_to_row преобразование."""
    if len(row) != len(CSV_HEADER):
        raise ValidationError(f"expected {len(CSV_HEADER)} columns, got {len(row)}")
    t = parse_float(row[0])
    xi = _vector(row[1:4])
    y = _vector(row[4:7])
    if t is None or xi is None or y is None:
        raise ValidationError("row lacks time, truth or measurement")
    return SampleRecord(
        t=t, xi=xi, y=y, outlier=row[7] == "1",
        xihat_eqv=_vector(row[8:11]), xihat_naive=_vector(row[11:14]),
        angle_err_eqv=parse_float(row[14]), angle_err_naive=parse_float(row[15]),
        V=parse_float(row[16]), Vdot=parse_float(row[17]),
    )


def read_csv(path: str) -> List[SampleRecord]:
    """
    Читает записи, сохранённые write_csv.

    Raises:
        OutputError: Если файл не читается
        ValidationError: Если заголовок или строки некорректны
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise OutputError(f"cannot read CSV ({e.strerror})", path)
    if not rows or rows[0] != CSV_HEADER:
        raise ValidationError(f"unexpected CSV header in {path}")
    return [row_to_record(row) for row in rows[1:]]

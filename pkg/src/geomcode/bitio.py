"""MSB-first bit stream writer and reader.

The reader zero-fills reads past the end of the valid bit range, so a
decoder whose last codeword needs lookahead can peek beyond the stream
without special-casing.  Padding content must never affect decoded
values; tests exercise this by also decoding with one-padding.
"""

from dataclasses import dataclass

__all__ = ["Codeword", "BitWriter", "BitReader"]


@dataclass(frozen=True)
class Codeword:
    """A run of leading one-bits followed by a fixed-width bit pattern.

    The pattern is at most 64 bits; the unary prefix is carried as a
    count so total codeword length is unlimited.
    """

    ones_prefix: int
    pattern: int
    pattern_len: int

    def __post_init__(self):
        if self.ones_prefix < 0:
            raise ValueError("ones_prefix must be non-negative")
        if not 0 <= self.pattern_len <= 64:
            raise ValueError("pattern_len must be in 0..64")
        if not 0 <= self.pattern < (1 << self.pattern_len):
            raise ValueError("pattern does not fit in pattern_len bits")

    @property
    def length(self) -> int:
        return self.ones_prefix + self.pattern_len

    def bits(self) -> str:
        """Codeword as a '0'/'1' string, for tables and tests."""
        tail = format(self.pattern, "0%db" % self.pattern_len) if self.pattern_len else ""
        return "1" * self.ones_prefix + tail

    def as_int(self) -> int:
        """Codeword bits packed into an integer of self.length bits."""
        return (((1 << self.ones_prefix) - 1) << self.pattern_len) | self.pattern

    def write_to(self, w: "BitWriter") -> None:
        w.write_ones(self.ones_prefix)
        w.write_bits(self.pattern, self.pattern_len)

    def to_bytes(self) -> bytes:
        w = BitWriter()
        self.write_to(w)
        return w.flush()


class BitWriter:
    """Appends bit patterns MSB-first into a growable byte buffer."""

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0  # pending bits, < 8 of them
        self._nbits = 0

    @property
    def bit_pos(self) -> int:
        return len(self._buf) * 8 + self._nbits

    def write_bits(self, pattern: int, count: int) -> None:
        """Append the count low-order bits of pattern, most significant first."""
        if not 0 <= count <= 64:
            raise ValueError("count must be in 0..64")
        if pattern < 0 or pattern >= (1 << count):
            raise ValueError("pattern does not fit in count bits")
        acc = (self._acc << count) | pattern
        nbits = self._nbits + count
        while nbits >= 8:
            nbits -= 8
            self._buf.append((acc >> nbits) & 0xFF)
        self._acc = acc & ((1 << nbits) - 1)
        self._nbits = nbits

    def write_ones(self, count: int) -> None:
        """Append count one-bits."""
        if count < 0:
            raise ValueError("count must be non-negative")
        while count > 64:
            self.write_bits((1 << 64) - 1, 64)
            count -= 64
        self.write_bits((1 << count) - 1, count)

    def flush(self) -> bytes:
        """Buffer contents with the final partial byte zero-padded.

        Does not reset the writer; callers record bit_pos separately if
        the exact bit count matters.
        """
        out = bytes(self._buf)
        if self._nbits:
            out += bytes([(self._acc << (8 - self._nbits)) & 0xFF])
        return out


class BitReader:
    """Reads bits MSB-first from a byte sequence.

    Reads at or past bit_len yield zero bits; the position is clamped to
    bit_len so 0 <= bit_pos <= bit_len always holds.
    """

    def __init__(self, data: bytes, bit_len: int | None = None):
        self._data = data
        self._len = 8 * len(data) if bit_len is None else bit_len
        if self._len < 0:
            raise ValueError("bit_len must be non-negative")
        self._pos = 0

    @property
    def bit_pos(self) -> int:
        return self._pos

    @property
    def bit_len(self) -> int:
        return self._len

    def peek_bits(self, count: int) -> int:
        """Next count bits as an unsigned integer, without consuming.

        Bits beyond bit_len read as zero.
        """
        if not 0 <= count <= 64:
            raise ValueError("count must be in 0..64")
        if count == 0:
            return 0
        pos = self._pos
        start = pos >> 3
        nbytes = ((pos & 7) + count + 7) >> 3
        chunk = self._data[start:start + nbytes]
        if len(chunk) < nbytes:
            chunk = chunk + b"\x00" * (nbytes - len(chunk))
        val = int.from_bytes(chunk, "big")
        val = (val >> (nbytes * 8 - (pos & 7) - count)) & ((1 << count) - 1)
        # zero out anything past the valid range
        if pos + count > self._len:
            excess = pos + count - self._len
            if excess >= count:
                return 0
            val &= ~((1 << excess) - 1) & ((1 << count) - 1)
        return val

    def read_bits(self, count: int) -> int:
        """Consume and return count bits (zero-filled past end of stream)."""
        val = self.peek_bits(count)
        self._pos = min(self._pos + count, self._len)
        return val

    def count_ones_capped(self, cap: int) -> int:
        """Consume consecutive one-bits, at most cap of them.

        A terminating zero-bit is left unconsumed: it belongs to the
        offset code that follows.
        """
        if cap < 0:
            raise ValueError("cap must be non-negative")
        total = 0
        while total < cap:
            k = min(cap - total, 64)
            v = self.peek_bits(k)
            if v == (1 << k) - 1:
                self._pos = min(self._pos + k, self._len)
                total += k
            else:
                leading = k - (v ^ ((1 << k) - 1)).bit_length()
                self._pos = min(self._pos + leading, self._len)
                total += leading
                break
        return total

    def count_ones(self) -> int:
        """Consume consecutive one-bits until a zero-bit (not consumed)."""
        total = 0
        while True:
            k = 64
            v = self.peek_bits(k)
            if v == (1 << k) - 1:
                self._pos = min(self._pos + k, self._len)
                total += k
            else:
                leading = k - (v ^ ((1 << k) - 1)).bit_length()
                self._pos = min(self._pos + leading, self._len)
                total += leading
                return total

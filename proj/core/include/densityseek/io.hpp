#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "densityseek/bitstream.hpp"

namespace densityseek {

// Raised for anything wrong with reading or writing stream files: unreadable
// paths, malformed bytes, truncated payloads, empty inputs.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class StreamFormat {
    ascii, // '0'/'1' bytes, whitespace ignored
    packed, // 8-byte little-endian bit count, then MSB-first packed bytes
    fasta, // first sequence record; G/C -> 1, A/T -> 0
};

// What to do with FASTA letters outside {G,C,A,T}: map to 0, map to 1, or
// reject the input. Skipping is never offered because dropping characters
// would shift every reported position.
enum class AmbiguousPolicy { zero, one, error };

StreamFormat parse_format(std::string_view text); // throws std::invalid_argument
AmbiguousPolicy parse_policy(std::string_view text); // throws std::invalid_argument
std::string_view format_name(StreamFormat format);

struct IngestOptions {
    StreamFormat format = StreamFormat::ascii;
    AmbiguousPolicy policy = AmbiguousPolicy::zero;
};

// Decodes a stream from `in`. Non-fatal oddities (ambiguous bases mapped by
// policy, extra FASTA records) produce one-line warnings on `diag` when it is
// non-null. Throws IoError on malformed or empty input.
Bitstream ingest(std::istream& in, const IngestOptions& opt, std::ostream* diag = nullptr);

// Same, reading from a file path. Throws IoError if the file cannot be opened.
Bitstream ingest_file(const std::string& path, const IngestOptions& opt,
                      std::ostream* diag = nullptr);

// Encodes `s` in the given format. The encodings round-trip through ingest
// bit-for-bit. FASTA output writes G for one and A for zero.
void write_stream(std::ostream& out, const Bitstream& s, StreamFormat format);
void write_stream_file(const std::string& path, const Bitstream& s, StreamFormat format);

} // namespace densityseek

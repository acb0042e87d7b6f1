#include "densityseek/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace densityseek {

StreamFormat parse_format(std::string_view text)
{
    if (text == "ascii")
        return StreamFormat::ascii;
    if (text == "packed")
        return StreamFormat::packed;
    if (text == "fasta")
        return StreamFormat::fasta;
    throw std::invalid_argument("unknown format: " + std::string(text));
}

AmbiguousPolicy parse_policy(std::string_view text)
{
    if (text == "zero")
        return AmbiguousPolicy::zero;
    if (text == "one")
        return AmbiguousPolicy::one;
    if (text == "error")
        return AmbiguousPolicy::error;
    throw std::invalid_argument("unknown ambiguous-base policy: " + std::string(text));
}

std::string_view format_name(StreamFormat format)
{
    switch (format) {
    case StreamFormat::ascii:
        return "ascii";
    case StreamFormat::packed:
        return "packed";
    case StreamFormat::fasta:
        return "fasta";
    }
    return "?";
}

namespace {

std::string read_all(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failure");
    return std::move(buf).str();
}

Bitstream ingest_ascii(const std::string& bytes)
{
    Bitstream::Builder out(bytes.size());
    for (char ch : bytes) {
        if (ch == '0' || ch == '1')
            out.push(ch == '1');
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw IoError(std::string("invalid byte in ascii stream: '") + ch + "'");
    }
    Bitstream s = std::move(out).finish();
    if (s.size() == 0)
        throw IoError("empty input");
    return s;
}

Bitstream ingest_packed(const std::string& bytes)
{
    if (bytes.size() < 8)
        throw IoError("packed stream shorter than its 8-byte header");
    std::uint64_t n = 0;
    for (int i = 7; i >= 0; --i)
        n = (n << 8) | static_cast<unsigned char>(bytes[static_cast<std::size_t>(i)]);
    const std::uint64_t payload = (n + 7) / 8;
    if (bytes.size() - 8 != payload)
        throw IoError("packed stream payload does not match its header bit count");
    if (n == 0)
        throw IoError("empty input");
    Bitstream::Builder out(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const unsigned char byte = static_cast<unsigned char>(bytes[8 + (i >> 3)]);
        out.push((byte >> (7 - (i & 7))) & 1);
    }
    return std::move(out).finish();
}

Bitstream ingest_fasta(const std::string& bytes, AmbiguousPolicy policy, std::ostream* diag)
{
    std::istringstream in(bytes);
    std::string line;
    bool saw_header = false;
    bool in_first_record = false;
    std::size_t extra_records = 0;
    std::size_t ambiguous = 0;
    Bitstream::Builder out(bytes.size());
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.front() == '>') {
            if (saw_header) {
                ++extra_records;
                in_first_record = false;
            } else {
                saw_header = in_first_record = true;
            }
            continue;
        }
        if (!saw_header)
            throw IoError("fasta input does not start with a '>' header");
        if (!in_first_record)
            continue;
        for (char ch : line) {
            if (std::isspace(static_cast<unsigned char>(ch)))
                continue;
            switch (ch) {
            case 'G':
            case 'g':
            case 'C':
            case 'c':
                out.push(true);
                break;
            case 'A':
            case 'a':
            case 'T':
            case 't':
                out.push(false);
                break;
            default:
                if (policy == AmbiguousPolicy::error)
                    throw IoError(std::string("ambiguous base '") + ch + "' in fasta input");
                ++ambiguous;
                out.push(policy == AmbiguousPolicy::one);
            }
        }
    }
    if (!saw_header)
        throw IoError("empty input");
    if (diag != nullptr && ambiguous > 0)
        *diag << "warning: " << ambiguous << " ambiguous base(s) mapped to "
              << (policy == AmbiguousPolicy::one ? '1' : '0') << '\n';
    if (diag != nullptr && extra_records > 0)
        *diag << "warning: ignored " << extra_records << " extra fasta record(s)\n";
    Bitstream s = std::move(out).finish();
    if (s.size() == 0)
        throw IoError("empty input");
    return s;
}

} // namespace

Bitstream ingest(std::istream& in, const IngestOptions& opt, std::ostream* diag)
{
    const std::string bytes = read_all(in);
    switch (opt.format) {
    case StreamFormat::ascii:
        return ingest_ascii(bytes);
    case StreamFormat::packed:
        return ingest_packed(bytes);
    case StreamFormat::fasta:
        return ingest_fasta(bytes, opt.policy, diag);
    }
    throw IoError("unknown format");
}

Bitstream ingest_file(const std::string& path, const IngestOptions& opt, std::ostream* diag)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    return ingest(in, opt, diag);
}

void write_stream(std::ostream& out, const Bitstream& s, StreamFormat format)
{
    const std::size_t n = s.size();
    switch (format) {
    case StreamFormat::ascii: {
        out << s.to_ascii() << '\n';
        break;
    }
    case StreamFormat::packed: {
        std::uint64_t count = n;
        char header[8];
        for (int i = 0; i < 8; ++i) {
            header[i] = static_cast<char>(count & 0xFF);
            count >>= 8;
        }
        out.write(header, 8);
        std::vector<char> payload((n + 7) / 8, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (s.bit(i + 1))
                payload[i >> 3] |= static_cast<char>(1 << (7 - (i & 7)));
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        break;
    }
    case StreamFormat::fasta: {
        out << ">densityseek n=" << n << '\n';
        for (std::size_t i = 1; i <= n; ++i) {
            out.put(s.bit(i) ? 'G' : 'A');
            if (i % 70 == 0 && i != n)
                out.put('\n');
        }
        if (n > 0)
            out.put('\n');
        break;
    }
    }
    if (!out)
        throw IoError("write failure");
}

void write_stream_file(const std::string& path, const Bitstream& s, StreamFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    write_stream(out, s, format);
    out.flush();
    if (!out)
        throw IoError("write failure on " + path);
}

} // namespace densityseek

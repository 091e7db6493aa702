#include "mbound/index_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <limits>

#include "mbound/errors.hpp"

namespace mbound {

namespace {

constexpr char kMagic[4] = {'M', 'B', 'I', 'X'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(v & 0xFF);
    out.push_back((v >> 8) & 0xFF);
    out.push_back((v >> 16) & 0xFF);
    out.push_back((v >> 24) & 0xFF);
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_string(std::vector<std::uint8_t>& out, std::string_view s) {
    put_varint(out, s.size());
    out.insert(out.end(), s.begin(), s.end());
}

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(data), static_cast<uInt>(len)));
}

struct Reader {
    const std::uint8_t* p;
    const std::uint8_t* end;

    void need(std::size_t n) const {
        if (static_cast<std::size_t>(end - p) < n)
            throw format_error("index file truncated");
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
                          std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
        p += 4;
        return v;
    }

    std::uint8_t u8() {
        need(1);
        return *p++;
    }

    std::uint64_t varint() {
        std::uint64_t v = 0;
        int shift = 0;
        while (true) {
            need(1);
            std::uint8_t b = *p++;
            if (shift == 63 && (b & 0x7E))
                throw format_error("index file corrupt: varint overflow");
            v |= std::uint64_t(b & 0x7F) << shift;
            if (!(b & 0x80)) return v;
            shift += 7;
            if (shift > 63) throw format_error("index file corrupt: varint overflow");
        }
    }

    std::string str() {
        std::uint64_t n = varint();
        need(n);
        std::string s(reinterpret_cast<const char*>(p), n);
        p += n;
        return s;
    }
};

}  // namespace

std::vector<std::uint8_t> serialize_index(const InvertedIndex& index) {
    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u32(out, InvertedIndex::kFormatVersion);
    const TokenPolicy& policy = index.policy();
    out.push_back(static_cast<std::uint8_t>((policy.case_fold ? 1 : 0) |
                                            (policy.diacritic_fold ? 2 : 0)));
    put_string(out, policy.segmentation);
    put_varint(out, index.total_docs());
    put_varint(out, index.term_count());
    for (const auto& tp : index.terms()) {  // already term-sorted
        put_string(out, tp.term);
        put_varint(out, tp.docs.size());
        DocumentId prev = 0;
        bool first = true;
        for (DocumentId id : tp.docs) {
            put_varint(out, first ? id : id - prev);
            prev = id;
            first = false;
        }
    }
    put_u32(out, crc_of(out.data(), out.size()));
    return out;
}

InvertedIndex deserialize_index(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4 + 4 + 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw format_error("not an index file (bad magic bytes)");

    // Magic and version sit at fixed offsets in every format version, so
    // the version check comes before anything version-specific (including
    // the checksum location).
    Reader r{bytes.data() + 4, bytes.data() + bytes.size() - 4};
    std::uint32_t version = r.u32();
    if (version != InvertedIndex::kFormatVersion)
        throw version_error("index file version " + std::to_string(version) +
                            ", reader supports version " +
                            std::to_string(InvertedIndex::kFormatVersion));

    std::uint32_t stored_crc = std::uint32_t(bytes[bytes.size() - 4]) |
                               std::uint32_t(bytes[bytes.size() - 3]) << 8 |
                               std::uint32_t(bytes[bytes.size() - 2]) << 16 |
                               std::uint32_t(bytes[bytes.size() - 1]) << 24;
    if (crc_of(bytes.data(), bytes.size() - 4) != stored_crc)
        throw format_error("index file corrupt (checksum mismatch)");

    std::uint8_t flags = r.u8();
    TokenPolicy policy;
    policy.case_fold = flags & 1;
    policy.diacritic_fold = flags & 2;
    policy.segmentation = r.str();

    std::uint64_t total_docs = r.varint();
    // Doc ids are stored as u32; a document count past that space cannot
    // have come from the builder and would truncate ids below.
    if (total_docs > std::uint64_t(std::numeric_limits<DocumentId>::max()) + 1)
        throw format_error("index file corrupt: document count exceeds id space");
    std::uint64_t term_count = r.varint();
    std::vector<InvertedIndex::TermPostings> terms;
    terms.reserve(term_count);
    for (std::uint64_t t = 0; t < term_count; ++t) {
        InvertedIndex::TermPostings tp;
        tp.term = r.str();
        std::uint64_t df = r.varint();
        tp.docs.reserve(df);
        std::uint64_t prev = 0;
        for (std::uint64_t i = 0; i < df; ++i) {
            std::uint64_t delta = r.varint();
            if (i > 0 && delta == 0)
                throw format_error("index file corrupt: postings not strictly ascending");
            if (delta > total_docs)
                throw format_error("index file corrupt: doc id out of range");
            std::uint64_t id = (i == 0) ? delta : prev + delta;
            if (id >= total_docs)
                throw format_error("index file corrupt: doc id out of range");
            tp.docs.push_back(static_cast<DocumentId>(id));
            prev = id;
        }
        terms.push_back(std::move(tp));
    }
    if (r.p != r.end) throw format_error("index file corrupt: trailing bytes");
    return InvertedIndex(std::move(terms), total_docs, std::move(policy));
}

void save_index(const InvertedIndex& index, const std::filesystem::path& path) {
    auto bytes = serialize_index(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw io_error("write failed for '" + path.string() + "'");
}

InvertedIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open index file '" + path.string() + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failed for '" + path.string() + "'");
    return deserialize_index(bytes);
}

}  // namespace mbound

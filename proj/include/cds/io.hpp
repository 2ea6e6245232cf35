#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cds/size_tree.hpp"

namespace cds {

static_assert(std::endian::native == std::endian::little, "serialization assumes a little-endian host");

inline constexpr uint8_t format_version = 1;
inline constexpr uint64_t header_bytes = 24;

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Byte sink that records a size_tree of everything written through it.
/// The stream may be null, in which case bytes are only counted.
class writer {
public:
    explicit writer(std::ostream* out, std::string root_name = "root");

    void write(const void* data, size_t n);
    void put_u8(uint8_t v) { write(&v, 1); }
    void put_u64(uint64_t v) { write(&v, 8); }
    void put_i64(int64_t v) { write(&v, 8); }
    void put_f64(double v) { write(&v, 8); }
    void put_string(std::string_view s);

    uint64_t bytes_written() const { return written_; }

    class scope {
    public:
        scope(writer& w, std::string name) : w_(&w) { w_->open(std::move(name)); }
        ~scope() { w_->close(); }
        scope(const scope&) = delete;
        scope& operator=(const scope&) = delete;

    private:
        writer* w_;
    };

    /// Closes the root node and returns the tree.
    size_tree finish();

private:
    void open(std::string name);
    void close();

    struct open_node {
        size_tree node;
        uint64_t start = 0;
    };
    std::ostream* out_;
    uint64_t written_ = 0;
    std::vector<open_node> stack_;
};

class reader {
public:
    explicit reader(std::istream& in) : in_(in) {}

    void read(void* data, size_t n);
    uint8_t get_u8();
    uint64_t get_u64();
    int64_t get_i64();
    double get_f64();
    std::string get_string();

private:
    std::istream& in_;
};

/// Framing shared by every structure: 8-byte magic, version byte, one
/// parameter byte, six zero bytes, and a 64-bit little-endian length.
struct frame_header {
    std::string magic;
    uint8_t version = format_version;
    uint8_t param = 0;
    uint64_t len = 0;
};

void write_header(writer& w, std::string_view magic, uint8_t param, uint64_t len);
frame_header read_header(reader& r, std::string_view expected_magic);
frame_header read_any_header(reader& r);

/// Serializes obj as a named child of the current writer node.
template <class T>
void write_child(writer& w, std::string name, const T& obj)
{
    writer::scope s(w, std::move(name));
    obj.serialize(w);
}

}  // namespace cds

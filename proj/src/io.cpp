#include "cds/io.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>

namespace cds {

writer::writer(std::ostream* out, std::string root_name) : out_(out)
{
    stack_.push_back({size_tree{std::move(root_name), 0, {}}, 0});
}

void writer::write(const void* data, size_t n)
{
    if (n == 0) return;
    if (out_) {
        out_->write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
        if (!*out_) throw std::runtime_error("write failed");
    }
    written_ += n;
}

void writer::put_string(std::string_view s)
{
    put_u64(s.size());
    write(s.data(), s.size());
}

void writer::open(std::string name)
{
    stack_.push_back({size_tree{std::move(name), 0, {}}, written_});
}

void writer::close()
{
    open_node top = std::move(stack_.back());
    stack_.pop_back();
    uint64_t total = written_ - top.start;
    uint64_t kids = 0;
    for (const auto& c : top.node.children) kids += c.total();
    top.node.self_bytes = total - kids;
    stack_.back().node.children.push_back(std::move(top.node));
}

size_tree writer::finish()
{
    while (stack_.size() > 1) close();
    size_tree root = std::move(stack_.back().node);
    uint64_t kids = 0;
    for (const auto& c : root.children) kids += c.total();
    root.self_bytes = written_ - kids;
    stack_.clear();
    stack_.push_back({size_tree{root.name, 0, {}}, written_});
    return root;
}

void reader::read(void* data, size_t n)
{
    if (n == 0) return;
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) throw format_error("unexpected end of input");
}

uint8_t reader::get_u8()
{
    uint8_t v;
    read(&v, 1);
    return v;
}

uint64_t reader::get_u64()
{
    uint64_t v;
    read(&v, 8);
    return v;
}

int64_t reader::get_i64()
{
    int64_t v;
    read(&v, 8);
    return v;
}

double reader::get_f64()
{
    double v;
    read(&v, 8);
    return v;
}

std::string reader::get_string()
{
    uint64_t n = get_u64();
    if (n > (uint64_t{1} << 32)) throw format_error("implausible string length");
    std::string s(n, '\0');
    read(s.data(), n);
    return s;
}

void write_header(writer& w, std::string_view magic, uint8_t param, uint64_t len)
{
    char tag[8] = {};
    std::memcpy(tag, magic.data(), std::min<size_t>(8, magic.size()));
    w.write(tag, 8);
    w.put_u8(format_version);
    w.put_u8(param);
    const char reserved[6] = {};
    w.write(reserved, 6);
    w.put_u64(len);
}

frame_header read_any_header(reader& r)
{
    char tag[8];
    r.read(tag, 8);
    frame_header h;
    h.magic.assign(tag, strnlen(tag, 8));
    h.version = r.get_u8();
    h.param = r.get_u8();
    char reserved[6];
    r.read(reserved, 6);
    h.len = r.get_u64();
    if (h.version != format_version)
        throw format_error("unsupported format version " + std::to_string(h.version) + " in " + h.magic);
    return h;
}

frame_header read_header(reader& r, std::string_view expected_magic)
{
    frame_header h = read_any_header(r);
    if (h.magic != expected_magic)
        throw format_error("expected " + std::string(expected_magic) + " but found '" + h.magic + "'");
    return h;
}

}  // namespace cds

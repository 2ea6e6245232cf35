#include "cds/int_vector.hpp"

#include <algorithm>
#include <cstring>

namespace cds {

namespace {

void check_width(unsigned width)
{
    if (width < 1 || width > 64) throw std::invalid_argument("int_vector width must be in [1,64], got " + std::to_string(width));
}

constexpr size_t stream_buffer_words = 1 << 15;  // 256 KiB

}  // namespace

int_vector::int_vector(uint64_t len, uint64_t value, unsigned width) : len_(len), width_(width)
{
    check_width(width);
    data_.assign(words_for(len, width), 0);
    if (value != 0) {
        if (width < 64 && value > bits::lo_mask(width))
            throw std::out_of_range("value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
        for (uint64_t i = 0; i < len; ++i) set(i, value);
    }
}

int_vector int_vector::from_values(std::span<const uint64_t> values, unsigned width)
{
    check_width(width);
    int_vector v(values.size(), 0, width);
    const uint64_t mask = bits::lo_mask(width);
    for (uint64_t i = 0; i < values.size(); ++i) {
        if (values[i] > mask)
            throw std::out_of_range("value " + std::to_string(values[i]) + " at index " + std::to_string(i) +
                                    " does not fit in " + std::to_string(width) + " bits");
        v.set(i, values[i]);
    }
    return v;
}

void int_vector::resize(uint64_t len)
{
    if (len < len_) {
        // zero the tail so that padding bits stay clean
        for (uint64_t i = len; i < len_; ++i) set(i, 0);
    }
    data_.resize(words_for(len, width_), 0);
    len_ = len;
}

void int_vector::set_width(unsigned width)
{
    check_width(width);
    if (width == width_) return;
    int_vector tmp(len_, 0, width);
    const uint64_t mask = bits::lo_mask(width);
    for (uint64_t i = 0; i < len_; ++i) {
        uint64_t v = (*this)[i];
        if (v > mask) throw std::out_of_range("value does not fit in narrowed width");
        tmp.set(i, v);
    }
    *this = std::move(tmp);
}

void int_vector::bit_compress()
{
    uint64_t mx = 0;
    for (uint64_t i = 0; i < len_; ++i) mx = std::max(mx, (*this)[i]);
    set_width(bits::width_for(mx));
}

void int_vector::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(width_), len_);
    w.write(data_.data(), data_.size() * 8);
}

void int_vector::load(reader& r)
{
    frame_header h = read_header(r, magic);
    check_width(h.param);
    if (h.len > (uint64_t{1} << 58)) throw format_error("implausible int_vector length");
    width_ = h.param;
    len_ = h.len;
    data_.assign(words_for(len_, width_), 0);
    r.read(data_.data(), data_.size() * 8);
}

bool int_vector::operator==(const int_vector& other) const
{
    return len_ == other.len_ && width_ == other.width_ && data_ == other.data_;
}

bit_vector bit_vector::from_string(std::string_view bits01)
{
    bit_vector bv(bits01.size());
    for (size_t i = 0; i < bits01.size(); ++i) {
        if (bits01[i] == '1') bv.set(i);
        else if (bits01[i] != '0') throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    return bv;
}

uint64_t bit_vector::count_ones() const
{
    uint64_t c = 0;
    for (uint64_t i = 0; i < word_count(); ++i) c += bits::popcount(data()[i]);
    return c;
}

std::string bit_vector::to_string() const
{
    std::string s(size(), '0');
    for (uint64_t i = 0; i < size(); ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

void bit_vector::load(reader& r)
{
    v_.load(r);
    if (v_.width() != 1) throw format_error("bit_vector payload must have width 1");
}

int_vector_file_writer::int_vector_file_writer(const std::string& path, unsigned width)
    : out_(path, std::ios::binary | std::ios::trunc), width_(width)
{
    check_width(width);
    if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
    buf_.reserve(stream_buffer_words);
    writer w(&out_);
    write_header(w, int_vector::magic, static_cast<uint8_t>(width), 0);
}

int_vector_file_writer::~int_vector_file_writer()
{
    if (!closed_) {
        try {
            close();
        } catch (...) {
        }
    }
}

void int_vector_file_writer::push(uint64_t v)
{
    v &= bits::lo_mask(width_);
    acc_ |= v << acc_bits_;
    if (acc_bits_ + width_ >= 64) {
        buf_.push_back(acc_);
        if (buf_.size() == stream_buffer_words) flush_words();
        const unsigned used = 64 - acc_bits_;
        acc_ = used < 64 ? v >> used : 0;
        acc_bits_ = acc_bits_ + width_ - 64;
    } else {
        acc_bits_ += width_;
    }
    ++len_;
}

void int_vector_file_writer::flush_words()
{
    out_.write(reinterpret_cast<const char*>(buf_.data()), static_cast<std::streamsize>(buf_.size() * 8));
    buf_.clear();
}

void int_vector_file_writer::close()
{
    if (closed_) return;
    closed_ = true;
    if (acc_bits_ > 0) buf_.push_back(acc_);
    flush_words();
    out_.seekp(16);
    out_.write(reinterpret_cast<const char*>(&len_), 8);
    out_.close();
    if (!out_) throw std::runtime_error("int_vector_file_writer: write failed");
    tracked_vector<uint64_t>().swap(buf_);
}

int_vector_file_reader::int_vector_file_reader(const std::string& path) : in_(path, std::ios::binary)
{
    if (!in_) throw std::runtime_error("cannot open " + path);
    reader r(in_);
    frame_header h = read_header(r, int_vector::magic);
    check_width(h.param);
    width_ = h.param;
    len_ = h.len;
    words_left_ = int_vector::words_for(len_, width_);
    buf_.resize(stream_buffer_words);
}

void int_vector_file_reader::refill()
{
    if (words_left_ == 0) throw format_error("int_vector file is truncated");
    const size_t want = static_cast<size_t>(std::min<uint64_t>(words_left_, buf_.size()));
    in_.read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(want * 8));
    if (static_cast<size_t>(in_.gcount()) != want * 8) throw format_error("int_vector file is truncated");
    words_left_ -= want;
    buf_len_ = want;
    buf_pos_ = 0;
}

uint64_t int_vector_file_reader::next()
{
    if (produced_ >= len_) throw std::out_of_range("int_vector_file_reader: read past end");
    uint64_t v;
    if (cur_bits_ >= width_) {
        v = cur_ & bits::lo_mask(width_);
        cur_ = width_ < 64 ? cur_ >> width_ : 0;
        cur_bits_ -= width_;
    } else {
        if (buf_pos_ == buf_len_) refill();
        const uint64_t w = buf_[buf_pos_++];
        const unsigned need = width_ - cur_bits_;
        v = cur_ | (need < 64 ? (w & bits::lo_mask(need)) << cur_bits_ : w);
        cur_ = need < 64 ? w >> need : 0;
        cur_bits_ = 64 - need;
    }
    ++produced_;
    return v;
}

int_vector load_int_vector_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    reader r(in);
    int_vector v;
    v.load(r);
    return v;
}

void save_int_vector_file(const int_vector& v, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    writer w(&out);
    v.serialize(w);
}

}  // namespace cds

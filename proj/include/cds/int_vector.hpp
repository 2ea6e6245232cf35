#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cds/bits.hpp"
#include "cds/io.hpp"
#include "cds/memory_monitor.hpp"

namespace cds {

//! Fixed-width bit-packed integer sequence.
/*!
 * Element i occupies bits [i*width, (i+1)*width) of the little-endian word
 * payload. Serialized as the common 24-byte frame (param = width, len =
 * element count) followed by ceil(len*width/64) 64-bit words.
 */
class int_vector {
public:
    static constexpr std::string_view magic = "CDS.IVEC";

    int_vector() = default;
    explicit int_vector(uint64_t len, uint64_t value = 0, unsigned width = 64);

    /// Throws std::out_of_range if a value does not fit in width bits.
    static int_vector from_values(std::span<const uint64_t> values, unsigned width);

    uint64_t size() const { return len_; }
    bool empty() const { return len_ == 0; }
    unsigned width() const { return width_; }
    uint64_t bit_size() const { return len_ * width_; }

    uint64_t operator[](uint64_t i) const
    {
        const uint64_t off = i * width_;
        const uint64_t w = off >> 6;
        const unsigned s = off & 63;
        uint64_t v = data_[w] >> s;
        if (s + width_ > 64) v |= data_[w + 1] << (64 - s);
        return v & bits::lo_mask(width_);
    }

    uint64_t at(uint64_t i) const
    {
        if (i >= len_) throw std::out_of_range("int_vector index " + std::to_string(i) + " >= " + std::to_string(len_));
        return (*this)[i];
    }

    /// Stores the low width bits of v.
    void set(uint64_t i, uint64_t v)
    {
        const uint64_t mask = bits::lo_mask(width_);
        v &= mask;
        const uint64_t off = i * width_;
        const uint64_t w = off >> 6;
        const unsigned s = off & 63;
        data_[w] = (data_[w] & ~(mask << s)) | (v << s);
        if (s + width_ > 64) {
            const unsigned spill = s + width_ - 64;
            data_[w + 1] = (data_[w + 1] & ~bits::lo_mask(spill)) | (v >> (64 - s));
        }
    }

    void resize(uint64_t len);
    /// Shrinks (or widens) the element width; values must fit.
    void set_width(unsigned width);
    /// Narrows width to the minimum that holds the largest element.
    void bit_compress();

    const uint64_t* data() const { return data_.data(); }
    uint64_t* data() { return data_.data(); }
    uint64_t word_count() const { return data_.size(); }

    void serialize(writer& w) const;
    void load(reader& r);

    bool operator==(const int_vector& other) const;

    static uint64_t words_for(uint64_t len, unsigned width) { return (len * width + 63) / 64; }

private:
    uint64_t len_ = 0;
    unsigned width_ = 64;
    tracked_vector<uint64_t> data_;
};

//! Plain uncompressed bitvector: an int_vector of width 1.
class bit_vector {
public:
    bit_vector() : v_(0, 0, 1) {}
    explicit bit_vector(uint64_t n, bool value = false) : v_(n, value ? 1 : 0, 1) {}

    static bit_vector from_string(std::string_view bits01);

    uint64_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool operator[](uint64_t i) const { return (v_.data()[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i, bool b = true)
    {
        uint64_t& w = v_.data()[i >> 6];
        if (b) w |= uint64_t{1} << (i & 63);
        else w &= ~(uint64_t{1} << (i & 63));
    }
    void resize(uint64_t n) { v_.resize(n); }

    const uint64_t* data() const { return v_.data(); }
    uint64_t* data() { return v_.data(); }
    uint64_t word_count() const { return v_.word_count(); }
    uint64_t count_ones() const;

    /// Returns the 64 bits starting at bit position pos (zero past the end).
    uint64_t get_word(uint64_t pos) const
    {
        const uint64_t w = pos >> 6;
        const unsigned s = pos & 63;
        uint64_t v = w < v_.word_count() ? v_.data()[w] >> s : 0;
        if (s && w + 1 < v_.word_count()) v |= v_.data()[w + 1] << (64 - s);
        return v;
    }

    std::string to_string() const;

    void serialize(writer& w) const { v_.serialize(w); }
    void load(reader& r);

    bool operator==(const bit_vector& other) const { return v_ == other.v_; }

private:
    int_vector v_;
};

/// Sequential cursor over an in-memory int_vector (same interface as the file reader).
class int_vector_cursor {
public:
    explicit int_vector_cursor(const int_vector& v) : v_(&v) {}
    uint64_t size() const { return v_->size(); }
    uint64_t next() { return (*v_)[pos_++]; }

private:
    const int_vector* v_;
    uint64_t pos_ = 0;
};

/// Writes an int_vector file element by element without holding it in memory.
class int_vector_file_writer {
public:
    int_vector_file_writer(const std::string& path, unsigned width);
    ~int_vector_file_writer();
    int_vector_file_writer(const int_vector_file_writer&) = delete;
    int_vector_file_writer& operator=(const int_vector_file_writer&) = delete;

    void push(uint64_t v);
    /// Flushes and patches the element count into the header.
    void close();
    uint64_t size() const { return len_; }

private:
    void flush_words();

    std::ofstream out_;
    unsigned width_;
    uint64_t len_ = 0;
    uint64_t acc_ = 0;
    unsigned acc_bits_ = 0;
    tracked_vector<uint64_t> buf_;
    bool closed_ = false;
};

/// Streams an int_vector file sequentially through a fixed-size buffer.
class int_vector_file_reader {
public:
    explicit int_vector_file_reader(const std::string& path);

    uint64_t size() const { return len_; }
    unsigned width() const { return width_; }
    /// Throws format_error if the file ends before size() elements.
    uint64_t next();

private:
    void refill();

    std::ifstream in_;
    unsigned width_ = 64;
    uint64_t len_ = 0;
    uint64_t produced_ = 0;
    uint64_t words_left_ = 0;
    tracked_vector<uint64_t> buf_;
    size_t buf_pos_ = 0;
    size_t buf_len_ = 0;
    uint64_t cur_ = 0;
    unsigned cur_bits_ = 0;
};

/// Loads a whole int_vector file into memory.
int_vector load_int_vector_file(const std::string& path);
void save_int_vector_file(const int_vector& v, const std::string& path);

}  // namespace cds

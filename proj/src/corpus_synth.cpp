#include "cds/corpus_synth.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace cds {

std::vector<unsigned char> corpus_byte_alphabet(uint64_t sigma, char separator)
{
    if (sigma == 0) throw std::invalid_argument("corpus alphabet size must be at least 1");
    std::vector<unsigned char> order;
    std::vector<bool> used(256, false);
    const auto add = [&](int b) {
        if (b < static_cast<int>(first_regular_symbol) || b == static_cast<unsigned char>(separator) || used[b]) return;
        used[b] = true;
        order.push_back(static_cast<unsigned char>(b));
    };
    for (int b = 'a'; b <= 'z'; ++b) add(b);
    for (int b = 'A'; b <= 'Z'; ++b) add(b);
    for (int b = '0'; b <= '9'; ++b) add(b);
    for (int b = 0; b < 256; ++b) add(b);
    if (sigma > order.size())
        throw std::invalid_argument("byte corpus alphabet size " + std::to_string(sigma) + " exceeds " +
                                    std::to_string(order.size()) + " usable bytes");
    order.resize(sigma);
    return order;
}

std::string corpus_token(uint64_t rank) { return "w" + std::to_string(rank); }

std::string gen_corpus(const corpus_spec& spec)
{
    const char sep = spec.mode == alphabet_mode::word ? '\n' : spec.separator;
    std::string out;
    if (!spec.fixed_docs.empty()) {
        for (const auto& d : spec.fixed_docs) out += d + sep;
        return out;
    }
    if (spec.docs == 0) throw std::invalid_argument("corpus needs at least one document");
    if (spec.avg_length == 0) throw std::invalid_argument("corpus average document length must be at least 1");
    if (spec.sigma == 0) throw std::invalid_argument("corpus alphabet size must be at least 1");

    std::vector<unsigned char> bytes;
    if (spec.mode == alphabet_mode::byte) bytes = corpus_byte_alphabet(spec.sigma, sep);
    std::vector<double> weights(spec.sigma);
    for (uint64_t r = 0; r < spec.sigma; ++r) weights[r] = 1.0 / std::pow(static_cast<double>(r + 1), spec.zipf);

    std::mt19937_64 rng(spec.seed);
    std::discrete_distribution<uint64_t> symbol(weights.begin(), weights.end());
    // number of extra symbols beyond the first has mean avg_length - 1
    std::geometric_distribution<uint64_t> extra(1.0 / static_cast<double>(spec.avg_length));
    for (uint64_t d = 0; d < spec.docs; ++d) {
        const uint64_t len = 1 + extra(rng);
        for (uint64_t i = 0; i < len; ++i) {
            const uint64_t r = symbol(rng);
            if (spec.mode == alphabet_mode::byte) {
                out.push_back(static_cast<char>(bytes[r]));
            } else {
                if (i) out.push_back(' ');
                out += corpus_token(r);
            }
        }
        out.push_back(sep);
    }
    return out;
}

void write_corpus(const corpus_spec& spec, const std::string& path)
{
    const std::string data = gen_corpus(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace cds

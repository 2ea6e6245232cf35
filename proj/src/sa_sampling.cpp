#include "cds/sa_sampling.hpp"

namespace cds {

std::string_view to_string(sample_order o) { return o == sample_order::suffix ? "suffix" : "text"; }

void sa_sampling::serialize(writer& w) const
{
    write_header(w, magic, static_cast<uint8_t>(kind_), n_);
    w.put_u64(rate_);
    write_child(w, "sa_samples", sa_);
    write_child(w, "isa_samples", isa_);
    if (kind_ == sample_order::text) write_child(w, "marks", marks_);
}

void sa_sampling::load(reader& r)
{
    frame_header h = read_header(r, magic);
    if (h.param > 1) throw format_error("unknown sampling order tag");
    kind_ = static_cast<sample_order>(h.param);
    n_ = h.len;
    rate_ = r.get_u64();
    if (rate_ == 0) throw format_error("zero sampling rate");
    sa_.load(r);
    isa_.load(r);
    if (kind_ == sample_order::text) marks_.load(r);
}

}  // namespace cds

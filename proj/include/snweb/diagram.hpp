#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snweb/errors.hpp"

namespace snweb {

enum class Dir : uint8_t { Up, Down };
using Signature = std::vector<Dir>;

/// Elementary slice generators of a Morse-form diagram, bottom to top.
/// xp: geometric positive crossing (the strand on the SW-NE diagonal passes
/// over), xm its mirror; both act on two adjacent strands of any orientations.
/// capE consumes (down, up); capQ consumes (up, down) with quantum weights;
/// cupE creates (up, down); cupQ creates (down, up) with quantum weights.
/// vout emits n up-strands (a source), vin consumes n up-strands (a sink).
/// x4 is the 4-valent vertex of singular link diagrams, on (up, up).
enum class Gen : uint8_t { XP, XM, CapE, CapQ, CupE, CupQ, VIn, VOut, X4 };

const char* gen_name(Gen g);
Gen gen_from_name(const std::string& name);

struct Slice {
    Gen gen;
    int at;
    bool operator==(const Slice&) const = default;
};

/// Morse-form diagram of an n-web (or singular link): an ordered list of
/// slices over an input signature, with the orientation chain validated on
/// construction. Immutable afterwards.
class SlicedDiagram {
public:
    SlicedDiagram(int n, std::vector<Slice> slices, Signature input = {});

    static SlicedDiagram parse(const std::string& text);
    std::string render() const;

    int n() const { return n_; }
    const std::vector<Slice>& slices() const { return slices_; }
    const Signature& input() const { return sigs_.front(); }
    const Signature& output() const { return sigs_.back(); }
    /// Signature below slice i (sig_at(0) = input, sig_at(size) = output).
    const Signature& sig_at(size_t i) const { return sigs_[i]; }
    bool closed() const { return input().empty() && output().empty(); }

    bool has_crossings() const;
    bool has_vertices() const;  // vin/vout/x4

    /// Sum of crossing signs (right-hand convention on oriented strands).
    int writhe() const;
    /// {sinks, sources} = {#vin, #vout}; x4 vertices are counted as sinks+sources
    /// by neither - use x4_count.
    std::pair<int, int> vertex_count() const;
    int x4_count() const;
    /// Number of link components; NotALink on diagrams with vertices.
    int component_count() const;

    /// Move the marked point of vertex `vertex_index` (vin/vout slices in
    /// bottom-to-top order) by k legs, rerouting the first k legs around the
    /// vertex with cups and caps. Returns a new diagram of the same web.
    SlicedDiagram rotate_basepoint(int vertex_index, int k) const;

    /// Side-by-side union (other to the right); both must be closed.
    SlicedDiagram disjoint_union(const SlicedDiagram& other) const;

    bool operator==(const SlicedDiagram&) const = default;

private:
    void validate();

    int n_;
    std::vector<Slice> slices_;
    std::vector<Signature> sigs_;
};

/// Crossing sign of geometric generator g on the given two-strand pattern.
int crossing_sign(Gen g, Dir left, Dir right);

/// Arity change bookkeeping shared by the validator and the tracers.
struct SliceShape {
    int in;   // strands consumed at `at`
    int out;  // strands produced at `at`
};
SliceShape slice_shape(Gen g, int n);

}  // namespace snweb

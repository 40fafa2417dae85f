#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bnet/enumerate.hpp"
#include "bnet/oriented_map.hpp"
#include "bnet/projective.hpp"

namespace bnet {

struct codec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// plantri-style ascii line "N list,list,...": vertex letters a..z then
/// A..Z, each list a rotation. Simple maps with at most 52 vertices.
/// Emission uses canonical vertex order, so isomorphic maps emit
/// identical lines.
std::string emit_ascii(const OrientedMap& m);
OrientedMap parse_ascii(const std::string& line);

/// planar_code byte stream: optional ">>planar_code<<" header, then per
/// graph a vertex-count byte and 0-terminated 1-based rotation lists.
/// Simple maps with at most 255 vertices.
std::string emit_planar_code(const std::vector<OrientedMap>& maps, bool header = true);
std::vector<OrientedMap> parse_planar_code(const std::string& bytes);

/// Incremental reader for pipe use; next() returns raw rotation lists or
/// nullopt at end of stream, throwing codec_error (with byte offset) on
/// malformed bytes.
class PlanarCodeReader {
  public:
    explicit PlanarCodeReader(std::istream& in) : in_(in) {}
    std::optional<std::vector<std::vector<int>>> next();
    long offset() const { return offset_; }

  private:
    std::istream& in_;
    long offset_ = 0;
    bool at_start_ = true;
};

/// The ppf output format: "k list_a,list_b,..." lists the rotations of the
/// lowercase vertices of the cover only; uppercase letters are deck images
/// (a maps to A, b to B, ...). Covers of at most 52 vertices.
std::string emit_quotient_ascii(const ProjectiveMap& p);
ProjectiveMap parse_quotient_ascii(const std::string& line);

/// Header "n,n_check,qbar,qbar_bip,qQ"; the sphere column is left empty on
/// rows where it was not computed.
std::string emit_count_csv(const std::vector<CountRow>& rows);

}  // namespace bnet

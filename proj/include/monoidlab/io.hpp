#pragma once

// Text formats.
//
//   .mon   line 1: n; lines 2..n+1: row i of the table as n indices;
//          then optional comment lines starting with '#'. A comment of the
//          form "# label: NAME" sets the label.
//   .act   line 1: "|A| |B|"; then |B| lines, line k holding θ_{b_k} as |A|
//          image indices.
//   .dec   sidecar decoding: line i holds the components of flat index i.
//
// Parse errors carry 1-based line and column numbers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/monoid.hpp"
#include "monoidlab/products.hpp"

namespace monoidlab {

  FiniteMonoid parse_monoid(std::string_view text, std::string default_label);
  FiniteMonoid read_monoid_file(std::filesystem::path const& path);
  std::string  format_monoid(FiniteMonoid const& m);

  struct RawAction {
    std::size_t                       left_order  = 0;
    std::size_t                       right_order = 0;
    std::vector<std::vector<index_t>> maps;
  };

  RawAction   parse_action(std::string_view text);
  RawAction   read_action_file(std::filesystem::path const& path);
  std::string format_action(EndoAction const& theta);

  std::string format_decoding(DecodedCarrier const& decoding);

  // A path (contains a separator or ends in ".mon") or a named() spec.
  FiniteMonoid resolve_monoid(std::string const& arg);

  std::string read_text_file(std::filesystem::path const& path);
  // Writes to a sibling temporary and renames it over the target.
  void write_file_atomic(std::filesystem::path const& path, std::string_view content);

}  // namespace monoidlab

#pragma once

#include <string>

#include "json.hpp"
#include "pclab/frame.hpp"

namespace pclab {

struct FrameIOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Frame file schema (indices 0-based, expressions in the scalar grammar):
//   { "label": str, "dim": int, "params": [str],
//     "brackets": [{"i": int, "j": int, "coeffs": {"k": expr}}],
//     "metric": [[rational-str]], "xi_index": int,
//     "phi": [[rational-str]] (optional when "pairing" is given),
//     "pairing": [[a, b]] }
FrameSpec frame_spec_from_json(const Json& j);
Json frame_spec_to_json(const FrameSpec& spec);

FrameSpec load_frame_file(const std::string& path);
void save_frame_file(const FrameSpec& spec, const std::string& path);

}  // namespace pclab

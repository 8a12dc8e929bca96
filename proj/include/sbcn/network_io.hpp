#ifndef SBCN_NETWORK_IO_HPP
#define SBCN_NETWORK_IO_HPP

#include <string>
#include <vector>

#include "sbcn/dag.hpp"
#include "sbcn/datagen.hpp"
#include "sbcn/suppes.hpp"

namespace sbcn {

// Network file: {"edges": [[i,j], ...], "k": int, "labels": [...]} with edges
// sorted lexicographically, keys alphabetical, no float formatting involved --
// byte-stable for identical graphs.

std::string network_to_json(const Dag& g);
Dag network_from_json(const std::string& text);
void save_network(const std::string& path, const Dag& g);
Dag load_network(const std::string& path);

/// Generative model: network fields plus per-node CPTs.
std::string model_to_json(const GenerativeModel& model);
GenerativeModel model_from_json(const std::string& text);
void save_model(const std::string& path, const GenerativeModel& model);
GenerativeModel load_model(const std::string& path);

/// Mask dumped as a network whose edges are the allowed pairs.
std::string mask_to_json(const ConstraintMask& mask, const std::vector<std::string>& labels);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace sbcn

#endif

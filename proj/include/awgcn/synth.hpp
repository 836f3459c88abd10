#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "awgcn/dataset.hpp"
#include "awgcn/matrix.hpp"

namespace awgcn {

// Shared settings for the alphabet-feature generators. insert_pos is a
// 0-based index; the default of 20 places the four alphabet tokens at
// positions 21-24 and the shared token at position 25, counting from 1.
struct SynSpec {
  int families = 3;
  int per_family = 100;
  int length = 50;
  int numeric_lo = 0;
  int numeric_hi = 50;  // inclusive
  int insert_pos = 20;
  std::vector<std::vector<std::string>> family_alphabets = {
      {"a", "b", "c", "d"}, {"e", "f", "g", "h"}, {"i", "j", "k", "l"}};
  std::string shared_token = "A";
  uint64_t rng_seed = 0;

  // Interleaved-generator controls. From a numeric token the stream switches
  // to alphabet mode with p_enter; from an alphabet token it drops back to
  // numeric mode with p_exit, checked per token unless exit_at_pass_boundary.
  double p_enter = 0.10;
  double p_exit = 0.05;
  bool exit_at_pass_boundary = false;

  void validate() const;  // throws Error(SpecOverflow / InvalidArgument)
};

// Random-walk generator settings: one transition matrix per family over a
// shared state set. Every row must sum to 1 within 1e-12.
struct MarkovSpec {
  std::vector<std::string> states;
  std::vector<Matrix> chains;  // one |states| x |states| matrix per family
  int walk_length = 250;
  int per_family = 100;
  uint64_t rng_seed = 0;

  void validate() const;
  // True if any row is a probability-1 self-loop (allowed, but worth a flag).
  bool has_absorbing_state() const;
};

// Fixed-position alphabet features in a numeric stream; labels family1..familyK.
Dataset gen_syndata(const SynSpec& spec);

// Two-state interleaved stream: alphabet passes can start anywhere, pause for
// numerics and repeat; the shared token closes each completed pass.
Dataset gen_ransyn(const SynSpec& spec);

// Random walks over per-family Markov chains from uniformly chosen starts.
Dataset gen_ranmarkov(const MarkovSpec& spec);

// Appends n_noise test-only sequences: each clone of a clean sequence gains
// every other family's alphabet tokens at random positions plus one numeric
// token spliced into its own feature run. Labels are unchanged.
Dataset inject_noise(Dataset ds, const SynSpec& spec, int n_noise);

// The four hand-written 5-state chains shipped as the ranmarkov default
// (version tag ranmarkov_chains_v1; also available as a JSON fixture).
MarkovSpec default_ranmarkov_spec();

// Loads a MarkovSpec from the JSON chain-fixture format.
MarkovSpec load_markov_spec(const std::string& path);
void save_markov_spec(const MarkovSpec& spec, const std::string& path);

}  // namespace awgcn

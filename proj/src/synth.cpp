#include "awgcn/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "awgcn/error.hpp"
#include "awgcn/ingest.hpp"
#include "awgcn/rng.hpp"

namespace awgcn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string family_label(int f) { return "family" + std::to_string(f + 1); }

std::string numeric_token(Rng& rng, const SynSpec& spec) {
  return std::to_string(rng.range(spec.numeric_lo, spec.numeric_hi));
}

Call make_call(std::string name) {
  Call c;
  c.name = std::move(name);
  return c;
}

}  // namespace

void SynSpec::validate() const {
  if (families < 1 || per_family < 1 || length < 1) {
    throw Error(ErrorCode::InvalidArgument, "families, per_family and length must be >= 1");
  }
  if (numeric_lo > numeric_hi) {
    throw Error(ErrorCode::InvalidArgument, "numeric_range lo > hi");
  }
  if (insert_pos < 0) {
    throw Error(ErrorCode::InvalidArgument, "insert_pos must be >= 0");
  }
  if (static_cast<size_t>(families) > family_alphabets.size()) {
    throw Error(ErrorCode::InvalidArgument, "not enough family alphabets for " +
                                                std::to_string(families) + " families");
  }
  if (p_enter < 0.0 || p_enter > 1.0 || p_exit < 0.0 || p_exit > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "mode-switch probabilities must be in [0, 1]");
  }
  std::set<std::string> seen;
  for (int f = 0; f < families; ++f) {
    const auto& alphabet = family_alphabets[f];
    if (alphabet.empty()) {
      throw Error(ErrorCode::InvalidArgument, "family alphabet " + std::to_string(f) + " is empty");
    }
    for (const auto& token : alphabet) {
      if (token == shared_token) {
        throw Error(ErrorCode::InvalidArgument, "shared token appears in a family alphabet");
      }
      if (!seen.insert(token).second) {
        throw Error(ErrorCode::InvalidArgument, "family alphabets are not pairwise disjoint");
      }
    }
    // alphabet block plus the shared token must fit after insert_pos
    long needed = static_cast<long>(insert_pos) + static_cast<long>(alphabet.size()) + 1;
    if (needed > length) {
      throw Error(ErrorCode::SpecOverflow,
                  "length " + std::to_string(length) + " cannot fit alphabet block at position " +
                      std::to_string(insert_pos));
    }
  }
}

Dataset gen_syndata(const SynSpec& spec) {
  spec.validate();
  std::vector<CallSequence> seqs;
  seqs.reserve(static_cast<size_t>(spec.families) * spec.per_family);
  for (int f = 0; f < spec.families; ++f) {
    const auto& alphabet = spec.family_alphabets[f];
    const int alpha_len = static_cast<int>(alphabet.size());
    for (int s = 0; s < spec.per_family; ++s) {
      Rng rng(mix_seed(spec.rng_seed, "syndata", static_cast<uint64_t>(f),
                       static_cast<uint64_t>(s)));
      CallSequence seq;
      seq.hash = "syn-f" + std::to_string(f + 1) + "-" + std::to_string(s);
      seq.label = family_label(f);
      seq.seq.reserve(spec.length);
      for (int pos = 0; pos < spec.length; ++pos) {
        if (pos >= spec.insert_pos && pos < spec.insert_pos + alpha_len) {
          seq.seq.push_back(make_call(alphabet[pos - spec.insert_pos]));
        } else if (pos == spec.insert_pos + alpha_len) {
          seq.seq.push_back(make_call(spec.shared_token));
        } else {
          seq.seq.push_back(make_call(numeric_token(rng, spec)));
        }
      }
      seqs.push_back(std::move(seq));
    }
  }
  return build_dataset(std::move(seqs));
}

Dataset gen_ransyn(const SynSpec& spec) {
  spec.validate();
  std::vector<CallSequence> seqs;
  seqs.reserve(static_cast<size_t>(spec.families) * spec.per_family);
  for (int f = 0; f < spec.families; ++f) {
    // One pass of the feature run is the family alphabet followed by the
    // shared token; interrupted passes resume where they stopped.
    std::vector<std::string> run = spec.family_alphabets[f];
    run.push_back(spec.shared_token);
    for (int s = 0; s < spec.per_family; ++s) {
      Rng rng(mix_seed(spec.rng_seed, "ransyn", static_cast<uint64_t>(f),
                       static_cast<uint64_t>(s)));
      CallSequence seq;
      seq.hash = "ran-f" + std::to_string(f + 1) + "-" + std::to_string(s);
      seq.label = family_label(f);
      seq.seq.reserve(spec.length);
      bool alphabet_mode = false;
      size_t cursor = 0;
      for (int pos = 0; pos < spec.length; ++pos) {
        if (!alphabet_mode) {
          if (rng.chance(spec.p_enter)) alphabet_mode = true;
        } else {
          bool at_boundary = cursor == 0;
          if ((!spec.exit_at_pass_boundary || at_boundary) && rng.chance(spec.p_exit)) {
            alphabet_mode = false;
          }
        }
        if (alphabet_mode) {
          seq.seq.push_back(make_call(run[cursor]));
          cursor = (cursor + 1) % run.size();
        } else {
          seq.seq.push_back(make_call(numeric_token(rng, spec)));
        }
      }
      seqs.push_back(std::move(seq));
    }
  }
  return build_dataset(std::move(seqs));
}

void MarkovSpec::validate() const {
  if (states.empty()) throw Error(ErrorCode::InvalidArgument, "empty state set");
  if (chains.empty()) throw Error(ErrorCode::InvalidArgument, "no chains");
  if (walk_length < 1 || per_family < 1) {
    throw Error(ErrorCode::InvalidArgument, "walk_length and per_family must be >= 1");
  }
  std::set<std::string> unique(states.begin(), states.end());
  if (unique.size() != states.size()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate state names");
  }
  const size_t n = states.size();
  for (size_t c = 0; c < chains.size(); ++c) {
    const Matrix& m = chains[c];
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::ShapeMismatch, "chain " + std::to_string(c) + " is not " +
                                                std::to_string(n) + "x" + std::to_string(n));
    }
    for (size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (size_t j = 0; j < n; ++j) {
        if (m.at(i, j) < 0.0) {
          throw Error(ErrorCode::InvalidArgument, "negative transition probability");
        }
        sum += m.at(i, j);
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument,
                    "chain " + std::to_string(c) + " row " + std::to_string(i) +
                        " sums to " + std::to_string(sum));
      }
    }
  }
}

bool MarkovSpec::has_absorbing_state() const {
  for (const Matrix& m : chains) {
    for (size_t i = 0; i < m.rows(); ++i) {
      if (m.at(i, i) == 1.0) return true;
    }
  }
  return false;
}

Dataset gen_ranmarkov(const MarkovSpec& spec) {
  spec.validate();
  const size_t n_states = spec.states.size();
  std::vector<CallSequence> seqs;
  seqs.reserve(spec.chains.size() * spec.per_family);
  for (size_t f = 0; f < spec.chains.size(); ++f) {
    const Matrix& chain = spec.chains[f];
    for (int s = 0; s < spec.per_family; ++s) {
      Rng rng(mix_seed(spec.rng_seed, "ranmarkov", f, static_cast<uint64_t>(s)));
      CallSequence seq;
      seq.hash = "mkv-f" + std::to_string(f + 1) + "-" + std::to_string(s);
      seq.label = family_label(static_cast<int>(f));
      seq.seq.reserve(spec.walk_length);
      size_t state = static_cast<size_t>(rng.below(n_states));
      seq.seq.push_back(make_call(spec.states[state]));
      for (int step = 1; step < spec.walk_length; ++step) {
        double u = rng.uniform01();
        double acc = 0.0;
        size_t next = state;
        bool found = false;
        for (size_t j = 0; j < n_states; ++j) {
          acc += chain.at(state, j);
          if (u < acc) {
            next = j;
            found = true;
            break;
          }
        }
        if (!found) {
          // u landed in the fp residue above the last positive entry
          for (size_t j = n_states; j-- > 0;) {
            if (chain.at(state, j) > 0.0) {
              next = j;
              break;
            }
          }
        }
        state = next;
        seq.seq.push_back(make_call(spec.states[state]));
      }
      seqs.push_back(std::move(seq));
    }
  }
  return build_dataset(std::move(seqs));
}

namespace {

// Longest leftmost stretch of consecutive own-alphabet tokens in pass order.
// Returns [begin, end) in sequence positions, or {-1, -1} when the sequence
// holds no own-alphabet token at all.
std::pair<long, long> find_feature_run(const std::vector<Call>& seq,
                                       const std::vector<std::string>& alphabet) {
  auto alpha_pos = [&](const std::string& name) -> long {
    for (size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == name) return static_cast<long>(i);
    }
    return -1;
  };
  long best_begin = -1, best_len = 0;
  long cur_begin = -1, cur_len = 0, prev_pos = -1;
  for (size_t i = 0; i < seq.size(); ++i) {
    long p = alpha_pos(seq[i].name);
    if (p >= 0 && (cur_len == 0 || p == prev_pos + 1)) {
      if (cur_len == 0) cur_begin = static_cast<long>(i);
      ++cur_len;
      prev_pos = p;
    } else if (p >= 0) {
      cur_begin = static_cast<long>(i);
      cur_len = 1;
      prev_pos = p;
    } else {
      cur_len = 0;
      prev_pos = -1;
    }
    if (cur_len > best_len) {
      best_len = cur_len;
      best_begin = cur_begin;
    }
  }
  if (best_begin < 0) return {-1, -1};
  return {best_begin, best_begin + best_len};
}

}  // namespace

Dataset inject_noise(Dataset ds, const SynSpec& spec, int n_noise) {
  spec.validate();
  if (n_noise < 0) throw Error(ErrorCode::InvalidArgument, "n_noise must be >= 0");
  if (n_noise == 0) return ds;
  if (static_cast<size_t>(n_noise) > ds.sequences.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "n_noise " + std::to_string(n_noise) + " exceeds dataset size " +
                    std::to_string(ds.sequences.size()));
  }

  // Clean source pools per family, in dataset order.
  std::vector<std::vector<size_t>> pool(spec.families);
  for (size_t i = 0; i < ds.sequences.size(); ++i) {
    const CallSequence& s = ds.sequences[i];
    if (s.test_only) continue;
    for (int f = 0; f < spec.families; ++f) {
      if (s.label == family_label(f)) {
        pool[f].push_back(i);
        break;
      }
    }
  }
  for (int f = 0; f < spec.families; ++f) {
    if (pool[f].empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "dataset has no clean sequences labeled " + family_label(f) +
                      "; it was not produced with this spec");
    }
  }

  std::vector<CallSequence> noise;
  noise.reserve(n_noise);
  for (int i = 0; i < n_noise; ++i) {
    const int f = i % spec.families;
    const auto& own = spec.family_alphabets[f];
    const CallSequence& source =
        ds.sequences[pool[f][(static_cast<size_t>(i) / spec.families) % pool[f].size()]];
    Rng rng(mix_seed(spec.rng_seed, "noise", static_cast<uint64_t>(i)));

    CallSequence out;
    out.hash = "noise-" + std::to_string(i) + "-" + source.hash;
    out.label = source.label;
    out.test_only = true;
    out.seq = source.seq;

    // Split the own feature run with one numeric token first, while it is
    // still intact; the foreign insertions below stay outside the run so the
    // interrupted pattern (a, b, <num>, c, d) survives verbatim.
    auto [run_begin, run_end] = find_feature_run(out.seq, own);
    if (run_begin >= 0) {
      long split_at = run_end - run_begin >= 2
                          ? run_begin + 1 + static_cast<long>(rng.below(run_end - run_begin - 1))
                          : run_end;
      out.seq.insert(out.seq.begin() + split_at, make_call(numeric_token(rng, spec)));
      ++run_end;
    }

    for (int o = 0; o < spec.families; ++o) {
      if (o == f) continue;
      for (const std::string& token : spec.family_alphabets[o]) {
        long len = static_cast<long>(out.seq.size());
        long slots_before = run_begin >= 0 ? run_begin + 1 : len + 1;
        long slots_after = run_begin >= 0 ? len - run_end : 0;
        long pick = static_cast<long>(rng.below(slots_before + slots_after));
        long pos = pick < slots_before ? pick : run_end + (pick - slots_before) + 1;
        out.seq.insert(out.seq.begin() + pos, make_call(token));
        if (run_begin >= 0 && pos <= run_begin) {
          ++run_begin;
          ++run_end;
        }
      }
    }
    noise.push_back(std::move(out));
  }

  std::vector<CallSequence> all = std::move(ds.sequences);
  all.insert(all.end(), std::make_move_iterator(noise.begin()),
             std::make_move_iterator(noise.end()));
  return build_dataset(std::move(all));
}

MarkovSpec default_ranmarkov_spec() {
  // ranmarkov_chains_v1: four 5-state chains over one Win32-flavored state
  // set, with pairwise L1 separation >= 0.5. Kept in sync with the JSON
  // fixture of the same version tag.
  MarkovSpec spec;
  spec.states = {"LoadLibrary", "RegQueryValue", "RegSetValue", "CreateFile", "CreateProcess"};
  spec.walk_length = 250;
  spec.per_family = 100;
  spec.chains = {
      // forward cycle
      Matrix(5, 5,
             {0.10, 0.70, 0.15, 0.00, 0.05,  //
              0.05, 0.10, 0.70, 0.15, 0.00,  //
              0.00, 0.05, 0.10, 0.70, 0.15,  //
              0.15, 0.00, 0.05, 0.10, 0.70,  //
              0.70, 0.15, 0.00, 0.05, 0.10}),
      // reverse cycle
      Matrix(5, 5,
             {0.10, 0.05, 0.00, 0.15, 0.70,  //
              0.70, 0.10, 0.05, 0.00, 0.15,  //
              0.15, 0.70, 0.10, 0.05, 0.00,  //
              0.00, 0.15, 0.70, 0.10, 0.05,  //
              0.05, 0.00, 0.15, 0.70, 0.10}),
      // hub on the first state
      Matrix(5, 5,
             {0.08, 0.23, 0.23, 0.23, 0.23,  //
              0.75, 0.15, 0.10, 0.00, 0.00,  //
              0.75, 0.00, 0.15, 0.10, 0.00,  //
              0.75, 0.00, 0.00, 0.15, 0.10,  //
              0.75, 0.10, 0.00, 0.00, 0.15}),
      // lazy drift
      Matrix(5, 5,
             {0.60, 0.25, 0.15, 0.00, 0.00,  //
              0.00, 0.60, 0.25, 0.15, 0.00,  //
              0.00, 0.00, 0.60, 0.25, 0.15,  //
              0.15, 0.00, 0.00, 0.60, 0.25,  //
              0.25, 0.15, 0.00, 0.00, 0.60}),
  };
  return spec;
}

MarkovSpec load_markov_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("chain fixture: ") + e.what());
  }
  MarkovSpec spec;
  try {
    spec.states = doc.at("states").get<std::vector<std::string>>();
    if (doc.contains("walk_length")) spec.walk_length = doc.at("walk_length").get<int>();
    if (doc.contains("per_family")) spec.per_family = doc.at("per_family").get<int>();
    for (const auto& chain : doc.at("chains")) {
      const size_t n = spec.states.size();
      std::vector<double> data;
      data.reserve(n * n);
      for (const auto& row : chain) {
        for (const auto& v : row) data.push_back(v.get<double>());
      }
      spec.chains.emplace_back(n, n, std::move(data));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("chain fixture: ") + e.what());
  }
  spec.validate();
  return spec;
}

void save_markov_spec(const MarkovSpec& spec, const std::string& path) {
  ordered_json doc;
  doc["version"] = "ranmarkov_chains_v1";
  doc["states"] = spec.states;
  doc["walk_length"] = spec.walk_length;
  doc["per_family"] = spec.per_family;
  ordered_json chains = ordered_json::array();
  for (const Matrix& m : spec.chains) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
      rows.push_back(std::move(row));
    }
    chains.push_back(std::move(rows));
  }
  doc["chains"] = std::move(chains);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace awgcn

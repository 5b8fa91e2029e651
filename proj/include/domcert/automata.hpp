#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domcert/recognizable.hpp"

namespace domcert {

enum class Mode {
    All,
    Minimal,
    Maximal,
    SpecialMaxInducedMatching,
    SpecialMinDomPw2,
};

Mode parse_mode(const std::string &s);
std::string mode_str(Mode m);

struct Problem {
    RecognizableSet sigma, rho;
    Mode mode = Mode::All;

    static Problem make(const std::string &sigma_text, const std::string &rho_text,
                        const std::string &mode_text);
    std::string str() const;  // "sigma=...; rho=...; mode=..."
    static Problem parse(const std::string &line);
};

// Per-vertex state machine.  States describe one vertex of the separator; a
// vertex is finalized ("leaves") when it is forgotten or at completion.
struct VertexAutomaton {
    virtual ~VertexAutomaton() = default;
    virtual int n() const = 0;
    virtual std::vector<int> fresh() const = 0;  // states of a new isolated vertex
    virtual bool member(int s) const = 0;        // vertex is in the chosen set
    virtual bool cert(int s) const { return false; }
    virtual bool accept(int s) const = 0;        // finalized vertex is valid
    // s gains an edge to `other`, which stays in the separator.
    virtual int add_edge_staying(int s, int other) const = 0;  // -1 rejects
    // s gains an edge to `other`, which is being finalized (other is final).
    virtual int add_edge_leaving(int s, int other_final) const = 0;
    virtual std::string state_name(int s) const { return std::to_string(s); }
};

std::unique_ptr<VertexAutomaton> make_vertex_automaton(const Problem &pr);

// Separator-tuple machine for pathwidth systems.  A state indexes the tuple
// of per-vertex states in lexicographic order (plus extra joint states for
// hand-written machines).
struct Descriptor {
    int o;           // departing vertex: -1 = the new vertex, else old position
    unsigned edges;  // bit i set = edge between departing vertex and the i-th
                     // vertex of the NEW separator tuple
};

// Canonical descriptor order: o = new first, then old positions ascending;
// for each o, edge masks descending from full to empty.
std::vector<Descriptor> all_descriptors(int k);
std::string descriptor_name(const Descriptor &d, int k);

struct TupleAutomaton {
    virtual ~TupleAutomaton() = default;
    int k = 1;
    virtual int dim() const = 0;
    virtual std::vector<int> initial() const = 0;  // k fresh isolated vertices
    // all successor states of `state` under `d` (one per accepted fresh
    // choice; repeats encode multiplicity)
    virtual void apply(const Descriptor &d, int state, std::vector<int> &out) const = 0;
    // completion: add edges among the final separator per mask, validate all
    virtual bool complete_accept(unsigned edge_mask, int state) const = 0;
    virtual std::string state_name(int s) const { return std::to_string(s); }
};

std::unique_ptr<TupleAutomaton> make_tuple_automaton(const Problem &pr, int k);

}  // namespace domcert

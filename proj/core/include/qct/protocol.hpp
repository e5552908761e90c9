#pragma once

#include "qct/qmath.hpp"
#include "qct/rng.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qct {

// ---------------------------------------------------------------------------
// Parameters

enum class Variant {
  WithReturn,  // pairs sent, one particle of each asked back
  NoReturn,    // commitments sent directly; no return rounds, no return tests
};

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ProtocolParams {
  int m = 2;          // number of interleaved coin procedures (security parameter)
  int n = 1;          // particles per side per procedure
  double theta = kPi / 9.0;  // angle between the two code states
  Variant variant = Variant::WithReturn;

  double overlap_gamma() const;  // cos(theta)
  void validate() const;         // throws std::invalid_argument
};

/// Fills n from (m, theta): n = i* + ceil(log2 m), where i* is the
/// earliest round at which cos^i(theta) drops below (m-1)/m^2. This is
/// the smallest n that keeps every analysed cheating round inside the
/// protocol with logarithmic margin.
ProtocolParams derive_params(int m, double theta,
                             Variant variant = Variant::WithReturn);

/// Code states: bit 0 at +theta/2, bit 1 at -theta/2.
PureState code_state(int bit, double theta);
ProductState code_product(int bit, int count, double theta);

// ---------------------------------------------------------------------------
// Messages and transcripts

enum class Role { Alice, Bob };
std::string to_string(Role r);
Role other(Role r);

enum class MessageKind {
  PairSend,        // particles put on the channel (2 states, 1 in no-return)
  MaskAnnounce,    // masked-bit announcement in a return round
  ParticleReturn,  // which particle of the slot pair goes back
  Reveal,          // final claim of a procedure bit
  AbortNotice,     // session torn down
};

std::string to_string(MessageKind k);

struct ProtocolMessage {
  int seq = 0;
  int step = 0;
  int i = 0;  // round, 0 when not applicable
  int j = 0;  // procedure, 0 when not applicable
  Role sender = Role::Alice;
  MessageKind kind = MessageKind::PairSend;
  std::vector<double> states;  // PairSend: half-angle tags held by the channel
  int bit = -1;                // MaskAnnounce / Reveal
  int which = -1;              // ParticleReturn: 0 = first, 1 = second
  std::string reason;          // AbortNotice

  friend bool operator==(const ProtocolMessage&, const ProtocolMessage&) = default;
};

struct TranscriptHeader {
  int m = 0;
  int n = 0;
  double theta = 0.0;
  std::string variant;
  std::uint64_t seed = 0;
  std::string alice;
  std::string bob;

  friend bool operator==(const TranscriptHeader&, const TranscriptHeader&) = default;
};

struct Transcript {
  TranscriptHeader header;
  std::vector<ProtocolMessage> messages;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Line-delimited records, one JSON object per line, header first.
/// serialize/parse round-trip bit-exactly (doubles use shortest
/// round-trip rendering).
std::string serialize_transcript(const Transcript& t);
Transcript parse_transcript(const std::string& text);  // throws on malformed input

// ---------------------------------------------------------------------------
// Session results

struct AbortInfo {
  int step = 0;   // 4 or 5 for commitment tests, 6 for end-of-session refusal
  int j = 0;
  Role by = Role::Alice;  // the party whose test failed / who tore down
  std::string test;

  friend bool operator==(const AbortInfo&, const AbortInfo&) = default;
};

struct PartyState {
  Role role = Role::Alice;
  std::vector<int> secret_bits;       // own procedure bits (a_j / b_j)
  std::vector<int> mask_bits;         // (i, j)-indexed pair masks, row-major
  std::vector<int> revealed_bits;     // own step-4 claims, -1 before reveal
  std::vector<int> partner_outcomes;  // accepted partner bits, -1 before
  // kept-particle registry: per procedure, the partner-commitment
  // particles currently held, in arrival order
  std::vector<ProductState> kept;
  // particles the partner handed back (with-return variant)
  std::vector<ProductState> returns_received;
  int cursor_step = 0;
  int cursor_i = 0;
  int cursor_j = 0;

  int mask(int i, int j, int m) const { return mask_bits[static_cast<size_t>((i - 1) * m + (j - 1))]; }
};

struct SessionOutcome {
  std::optional<AbortInfo> abort;
  std::optional<int> alice_bit;
  std::optional<int> bob_bit;
  Transcript transcript;  // messages empty when recording is off
  PartyState alice_state;
  PartyState bob_state;
  std::vector<std::string> tags;  // strategy telemetry, one entry per event

  bool completed() const { return !abort.has_value(); }
};

struct SessionOptions {
  bool record_transcript = true;
};

/// Final bits of a completed session: each party xors its own procedure
/// bits with the partner bits it accepted. Throws if either party has
/// unresolved outcomes.
std::pair<int, int> final_bits(const PartyState& alice, const PartyState& bob);

/// One commitment test: accept iff unit_draw < born_probability(held,
/// code_product(claimed_bit, n, theta)). Factor-count mismatch throws.
bool commitment_test(const ProductState& held, int claimed_bit,
                     const ProtocolParams& params, double unit_draw);

// ---------------------------------------------------------------------------
// Strategy interface

class SessionCtx;

/// Per-session behavior of one party. The defaults implement the honest
/// protocol; adversaries override individual hooks. Hooks may only touch
/// particles the party currently holds, and must be deterministic given
/// the session seed and the observed transcript prefix.
class PartyAgent {
 public:
  virtual ~PartyAgent() = default;

  virtual std::vector<int> choose_secret_bits(SessionCtx& ctx);
  virtual int choose_mask(SessionCtx& ctx, int i, int j);

  /// No-return variant step 2: what to put on the channel for (i, j).
  struct CommitSend {
    enum class Kind { Fresh, ForwardReceived } kind = Kind::Fresh;
    int bit = 0;  // Fresh: encode this bit
  };
  virtual CommitSend choose_commit_send(SessionCtx& ctx, int i, int j);

  virtual void on_receive_particles(SessionCtx& ctx, int i, int j);

  /// Runs after the partner's announcement in slot (i, j) and before this
  /// party's own; may perform measurements on held particles.
  virtual void pre_announcement_measurement(SessionCtx& ctx, int i, int j);

  virtual int choose_mask_announcement(SessionCtx& ctx, int i, int j);
  virtual int choose_return(SessionCtx& ctx, int i, int j, int partner_bit);
  virtual int choose_reveal(SessionCtx& ctx, int j);

  /// Honest parties run the step-4/5 tests and abort on failure; a
  /// cheater never aborts on its own tests.
  virtual bool run_own_tests() const { return true; }

  /// End-of-session veto (the permitted "refuse the outcome" move).
  virtual bool accept_outcome(SessionCtx& ctx, int own_bit);
};

/// Immutable description of a strategy: a name plus a per-session agent
/// factory. Strategy values share no state between sessions.
class StrategySpec {
 public:
  virtual ~StrategySpec() = default;
  virtual std::string name() const = 0;
  /// Throws std::invalid_argument when the strategy cannot run under the
  /// given parameters (e.g. a forwarding attack against the pair/return
  /// variant).
  virtual void check_applicable(const ProtocolParams& params) const;
  virtual std::unique_ptr<PartyAgent> make_agent(Role role,
                                                 const ProtocolParams& params) const = 0;
};

/// What an agent can see and do mid-session.
class SessionCtx {
 public:
  virtual ~SessionCtx() = default;

  virtual const ProtocolParams& params() const = 0;
  virtual Role role() const = 0;
  virtual PartyState& self() = 0;

  /// Partner's mask announcement at (i, j), -1 if not yet observed.
  virtual int observed_mask_announcement(int i, int j) const = 0;
  /// Partner's step-4 reveal at j, -1 if not yet observed.
  virtual int observed_reveal(int j) const = 0;

  virtual double rng_uniform(RngPurpose purpose, int i, int j) = 0;
  virtual int rng_bit(RngPurpose purpose, int i, int j) = 0;

  /// Number of resolved, unconsumed partner-commitment particles held at j.
  virtual int held_count(int j) const = 0;

  /// Optimal conclusive discrimination of the held particles at j between
  /// the two code hypotheses. Returns the encoded bit on a conclusive
  /// outcome, nullopt otherwise; consumes the measured particles.
  virtual std::optional<int> measure_held_unambiguous(int j) = 0;

  /// Minimum-error joint measurement of the parity of all procedures'
  /// encoded bits; consumes every held particle. Requires the same number
  /// of held particles at each j.
  virtual int measure_held_parity_best_guess() = 0;

  virtual void tag(const std::string& label) = 0;
};

/// Executes one session. The schedule is fixed: rounds outer, procedures
/// inner, and within each slot the first party announces before the
/// second. Measurement outcomes are sampled by exact Born probabilities
/// from the symbolic particle registry. A strategy emitting invalid data
/// aborts the session as a protocol violation attributed to that party.
SessionOutcome run_session(const ProtocolParams& params,
                           const StrategySpec& alice, const StrategySpec& bob,
                           std::uint64_t seed, const SessionOptions& options = {});

}  // namespace qct

#pragma once

#include <optional>
#include <string>

namespace cranklab {

enum class Status { verified, mismatch, corrected_form_verified };

std::string to_string(Status s);

/// Where two sides first disagree: the q-exponent and both coefficients (residues when a
/// modulus is in play), rendered as text.
struct Mismatch {
  int exponent = 0;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of one identity or congruence check. status == mismatch iff first_mismatch is set.
struct VerificationReport {
  std::string identity_name;
  int order = 0;
  std::optional<std::string> modulus_name;
  Status status = Status::verified;
  std::optional<Mismatch> first_mismatch;
  std::string notes;

  bool passed() const { return status != Status::mismatch; }
  void append_note(const std::string& note);
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verified_report(std::string name, int order,
                                   std::optional<std::string> modulus = std::nullopt);
VerificationReport mismatch_report(std::string name, int order, Mismatch where,
                                   std::optional<std::string> modulus = std::nullopt);

/// Literal-first policy: if the printed form holds return it unchanged; otherwise, if the
/// corrected form holds, mark corrected_form_verified and keep the literal failure in the notes.
VerificationReport combine_literal_and_corrected(const VerificationReport& literal,
                                                 const VerificationReport& corrected,
                                                 const std::string& correction_description);

}  // namespace cranklab

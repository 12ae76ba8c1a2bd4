#include "cranklab/verification_report.hpp"

namespace cranklab {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::mismatch:
      return "mismatch";
    case Status::corrected_form_verified:
      return "corrected_form_verified";
  }
  return "unknown";
}

void VerificationReport::append_note(const std::string& note) {
  if (note.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += note;
}

VerificationReport verified_report(std::string name, int order,
                                   std::optional<std::string> modulus) {
  VerificationReport r;
  r.identity_name = std::move(name);
  r.order = order;
  r.modulus_name = std::move(modulus);
  r.status = Status::verified;
  return r;
}

VerificationReport mismatch_report(std::string name, int order, Mismatch where,
                                   std::optional<std::string> modulus) {
  VerificationReport r = verified_report(std::move(name), order, std::move(modulus));
  r.status = Status::mismatch;
  r.first_mismatch = std::move(where);
  return r;
}

namespace {

std::string describe_mismatch(const VerificationReport& r) {
  if (!r.first_mismatch) return "holds";
  const auto& m = *r.first_mismatch;
  return "fails at q^" + std::to_string(m.exponent) + " (lhs " + m.lhs + ", rhs " + m.rhs + ")";
}

}  // namespace

VerificationReport combine_literal_and_corrected(const VerificationReport& literal,
                                                 const VerificationReport& corrected,
                                                 const std::string& correction_description) {
  if (literal.status == Status::verified) {
    VerificationReport out = literal;
    out.append_note("printed form verified");
    return out;
  }
  VerificationReport out = corrected;
  out.identity_name = literal.identity_name;
  out.notes.clear();
  out.append_note("printed form " + describe_mismatch(literal));
  out.append_note("correction: " + correction_description);
  if (corrected.status == Status::mismatch) {
    out.append_note("corrected form " + describe_mismatch(corrected));
  } else {
    out.status = Status::corrected_form_verified;
    out.first_mismatch.reset();
    out.append_note("corrected form verified");
  }
  out.append_note(literal.notes);
  out.append_note(corrected.notes);
  return out;
}

}  // namespace cranklab

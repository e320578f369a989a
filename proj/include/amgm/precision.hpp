#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace amgm {

// Knobs controlling the working precision of every interval computation and
// the retry schedule used when an enclosure comes out too wide to certify a
// requested property.  Escalation re-runs the computation from the original
// inputs at working_precision * escalation_factor^step; it never mutates the
// ingested values, so every verdict is a statement about the numbers as
// represented at ingestion.
struct PrecisionContext {
    mpfr_prec_t working_precision = 128;
    unsigned max_escalations = 3;
    unsigned escalation_factor = 2;

    PrecisionContext() = default;

    PrecisionContext(mpfr_prec_t bits, unsigned max_esc = 3, unsigned factor = 2)
        : working_precision(bits), max_escalations(max_esc), escalation_factor(factor) {
        validate();
    }

    void validate() const {
        if (working_precision < 53)
            throw std::invalid_argument("working precision must be at least 53 bits");
        if (escalation_factor < 2)
            throw std::invalid_argument("escalation factor must be at least 2");
    }

    // Precision after `step` escalations (step 0 is the working precision).
    mpfr_prec_t precision_at(unsigned step) const {
        mpfr_prec_t p = working_precision;
        for (unsigned i = 0; i < step; ++i) p *= static_cast<mpfr_prec_t>(escalation_factor);
        return p;
    }
};

// A requested certification could not be produced even at the highest
// escalated precision.  Carries a human-readable account of what was too
// wide; callers map this to a distinct "inconclusive" process exit.
class InconclusiveError : public std::runtime_error {
  public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

// A depth-limited search ran out of levels before meeting its target.
class DepthCapError : public std::runtime_error {
  public:
    DepthCapError(const std::string& what, unsigned cap) : std::runtime_error(what), depth_cap(cap) {}
    unsigned depth_cap;
};

// Two certified facts contradict each other.  This is unreachable unless the
// rounding plumbing itself is broken, so it is a logic error, not a verdict.
class InternalContradictionError : public std::logic_error {
  public:
    explicit InternalContradictionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace amgm

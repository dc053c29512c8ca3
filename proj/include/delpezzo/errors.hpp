// Named domain errors. Every computational module reports failures through
// one of these; the CLI prints the error name verbatim, so the names are part
// of the external interface and must stay stable.
#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define DELPEZZO_DOMAIN_ERROR(Name)                                   \
    class Name final : public DomainError {                           \
    public:                                                           \
        explicit Name(const std::string& what)                        \
            : DomainError(#Name, what) {}                             \
    }

// qseries
DELPEZZO_DOMAIN_ERROR(InvalidFactor);
DELPEZZO_DOMAIN_ERROR(OutOfTruncation);
DELPEZZO_DOMAIN_ERROR(NegativeExponentAfterSubstitution);

// surface
DELPEZZO_DOMAIN_ERROR(DimensionMismatch);
DELPEZZO_DOMAIN_ERROR(HalfIntegerGenus);

// bounds
DELPEZZO_DOMAIN_ERROR(NotAmple);
DELPEZZO_DOMAIN_ERROR(EmptyLinearSystem);

// genfun
DELPEZZO_DOMAIN_ERROR(InvalidRho);
DELPEZZO_DOMAIN_ERROR(OutOfStableRange);

// extract
DELPEZZO_DOMAIN_ERROR(NegativeInvariant);
DELPEZZO_DOMAIN_ERROR(IncompleteInput);

// cherncount
DELPEZZO_DOMAIN_ERROR(OutOfRange);

#undef DELPEZZO_DOMAIN_ERROR

} // namespace delpezzo

#pragma once

#include <map>
#include <optional>

#include "pclab/classify.hpp"
#include "pclab/frame_io.hpp"

namespace pclab {

struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::string notes;
    int order = 0;
    FrameSpec frame;
    std::vector<std::string> nonzero;  // parameters constrained to be nonzero
    std::vector<std::string> pm_one;   // parameters constrained to +-1
    std::vector<std::string> basis_names;
    Json goldens;

    std::vector<Polynomial> inequations() const;
};

struct GoldenCheck {
    std::string what;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::string id;
    bool ok = false;
    std::vector<GoldenCheck> checks;
    std::string counterexample;  // minimal substitution exhibiting a mismatch
};

class Catalog {
public:
    static std::string default_dir();
    static Catalog load(const std::string& dir);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry& get(const std::string& id) const;

    // Substitutes the assignment (checked against the family constraints)
    // and validates. A validation failure here signals an engine bug.
    ParacontactFrame instantiate(const std::string& id,
                                 const std::map<std::string, Rational>& assignment) const;

    VerifyReport verify(const std::string& id) const;

private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace pclab

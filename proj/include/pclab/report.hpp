#pragma once

#include "pclab/catalog.hpp"
#include "pclab/identities.hpp"

namespace pclab {

// Full analysis of one validated frame.
struct Analysis {
    ParacontactFrame frame;
    Connection conn;
    CurvaturePackage pkg;
    std::vector<IdentityResult> identities;
    Classification cls;
};

Analysis analyze_frame(const ParacontactFrame& frame,
                       const std::vector<Polynomial>& inequations = {});

Json analysis_to_json(const Analysis& a);
std::string analysis_to_text(const Analysis& a);

Json validation_to_json(const std::string& label, const SignConvention& conv,
                        const std::vector<Violation>& violations);

std::string poly_matrix_to_text(const PolyMat& m, const std::string& name);

}  // namespace pclab

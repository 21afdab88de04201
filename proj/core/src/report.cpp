#include "feltfp/report.hpp"

namespace feltfp {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::pass_sampled: return "pass_sampled";
    }
    return "?";
}

std::string_view to_string(Scope s) noexcept {
    switch (s) {
        case Scope::exhaustive: return "exhaustive";
        case Scope::sampled: return "sampled";
        case Scope::closed_form: return "closed_form";
    }
    return "?";
}

}  // namespace feltfp

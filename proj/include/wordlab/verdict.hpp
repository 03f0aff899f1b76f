#pragma once

namespace wordlab {

// Outcome of checking one inequality or identity instance.
enum class BoundVerdict {
    Holds,
    Violated,
    Undefined,
    PreconditionNote,
};

inline const char* bound_verdict_name(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Holds: return "holds";
        case BoundVerdict::Violated: return "violated";
        case BoundVerdict::Undefined: return "undefined";
        case BoundVerdict::PreconditionNote: return "precondition-note";
    }
    return "undefined";
}

}  // namespace wordlab

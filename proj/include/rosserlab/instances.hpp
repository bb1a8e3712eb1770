#pragma once

#include <vector>

#include "rosserlab/ast.hpp"

namespace rosserlab {

// A formula c is an instance of f when f = all v0 ... all v_{k-1} psi for
// some k >= 1 and c arises from peeling the k outermost quantifiers,
// substituting a numeral for each peeled variable in turn. KMayBeZero also
// admits k = 0 (every formula an instance of itself); it exists purely so
// the acceptance audit can rerun the claim checks under the other reading.
enum class InstanceConvention { KAtLeastOne, KMayBeZero };

// Process-wide default, normally KAtLeastOne. The audit rerun flips it to
// confirm no claim verdict depends on the choice.
InstanceConvention default_instance_convention();
void set_default_instance_convention(InstanceConvention conv);

bool is_instance(const Formula& candidate, const Formula& f);
bool is_instance(const Formula& candidate, const Formula& f, InstanceConvention conv);

// All instances of f with code <= code_bound, ascending; empty when f is
// not universal. Finite because codes grow with numeral size.
std::vector<Formula> instances_within(const Formula& f, const Code& code_bound);
std::vector<Formula> instances_within(const Formula& f, const Code& code_bound,
                                      InstanceConvention conv);

}  // namespace rosserlab

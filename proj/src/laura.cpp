namespace qw {}

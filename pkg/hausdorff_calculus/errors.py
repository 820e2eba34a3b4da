class HausdorffException(Exception):
    """ Numerical or domain error raised by the Hausdorff calculus library """

    def __init__(self, *args):
        """ Creates a new Hausdorff exception """

        super(HausdorffException, self).__init__(*args)

        if args:
            self.message = args[0]
        else:
            self.message = None

    def __str__(self):
        """ Get exception text """

        if self.message:
            return self.message
        else:
            return 'HausdorffException has been raised'


class ConfigException(HausdorffException):
    """ Malformed run configuration """

    def __init__(self, message, section=None, key=None, line=None):
        """ Creates a new configuration exception pointing at the offending section/key """

        super(ConfigException, self).__init__(message)

        self.section = section
        self.key = key
        self.line = line

    def __str__(self):
        """ Get exception text including the location of the problem """

        location = []
        if self.section:
            location.append('[{}]'.format(self.section))
        if self.key:
            location.append(self.key)
        if self.line:
            location.append('line {}'.format(self.line))
        if location:
            return '{}: {}'.format(' '.join(location), self.message)
        return super(ConfigException, self).__str__()

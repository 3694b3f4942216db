import pytest


def post(client, url, data):
    return client.post(url, data, format='json')


class TestPermutationEndpoints:

    def test_parse_word(self, api_client):
        response = post(api_client, '/api/permutations/parse/', {'text': '211324314'})
        assert response.status_code == 200
        assert response.data['kind'] == 'word'
        assert response.data['spec'] == '1^3,2^2,3^2,4^2'
        assert response.data['n'] == 9
        assert response.data['sequence'] == {'n': 9, 'values': [2, 1, 1, 3, 2, 4, 3, 1, 4]}

    def test_parse_permutation(self, api_client):
        response = post(api_client, '/api/permutations/parse/', {'text': '10,2,1,3,4,5,6,7,8,9'})
        assert response.data['kind'] == 'permutation'
        assert response.data['letters'][0] == 10
        assert response.data['sequence'] == {'n': 10, 'values': [10, 2, 1, 3, 4, 5, 6, 7, 8, 9]}

    def test_parse_error(self, api_client):
        response = post(api_client, '/api/permutations/parse/', {'text': '3 x 2'})
        assert response.status_code == 400
        assert response.data['error'].startswith('position 2')

    def test_elapsed_header(self, api_client):
        response = post(api_client, '/api/permutations/parse/', {'text': '312'})
        assert float(response['X-Mahonia-Elapsed']) >= 0

    def test_missing_field(self, api_client):
        assert post(api_client, '/api/permutations/parse/', {}).status_code == 400

    def test_complement(self, api_client):
        response = post(api_client, '/api/permutations/complement/', {'permutation': '38516427'})
        assert response.data['output'] == '61483572'
        assert response.data['source'] == {'n': 8, 'values': [3, 8, 5, 1, 6, 4, 2, 7]}
        assert response.data['image'] == {'n': 8, 'values': [6, 1, 4, 8, 3, 5, 7, 2]}


class TestStatEndpoint:

    def test_maj(self, api_client):
        response = post(api_client, '/api/stats/evaluate/', {'stat': 'maj', 'text': '211324314'})
        assert response.status_code == 200
        assert response.data['value'] == 18

    def test_s_vector(self, api_client):
        response = post(api_client, '/api/stats/evaluate/', {'stat': 'svec', 'text': '312432143'})
        assert response.data['value'] == [0, 0, 1, 3, 3, 4, 5, 6, 2]

    def test_unknown_statistic(self, api_client):
        assert post(api_client, '/api/stats/evaluate/', {'stat': 'exc', 'text': '12'}).status_code == 400


class TestCodeEndpoints:

    def test_encode(self, api_client):
        response = post(api_client, '/api/codes/encode/', {'scheme': 'cmaj', 'permutation': '38516427'})
        assert response.data['entries'] == [0, 1, 1, 2, 3, 4, 4, 1]
        assert response.data['total'] == 16

    def test_decode(self, api_client):
        response = post(api_client, '/api/codes/decode/', {'scheme': 'lehmer', 'code': '(0,0,1,3,1,4,3,5,2)'})
        assert response.data['output'] == '496182537'
        assert response.data['total'] is None
        assert response.data['permutation'] == {'n': 9, 'values': [4, 9, 6, 1, 8, 2, 5, 3, 7]}

    def test_transform(self, api_client):
        response = post(api_client, '/api/codes/transform/', {'transform': 'complement', 'code': '0,0,0'})
        assert response.data['entries'] == [0, 1, 2]
        assert response.data['permutation'] is None

    def test_code_bound(self, api_client):
        response = post(api_client, '/api/codes/decode/', {'scheme': 'cmaj', 'code': '0,2'})
        assert response.status_code == 400
        assert 'error' in response.data


class TestFoataEndpoints:

    def test_phi(self, api_client):
        response = post(api_client, '/api/foata/map/', {'text': '312'})
        assert response.data['map'] == 'foata'
        assert response.data['output'] == '132'

    def test_partial(self, api_client):
        response = post(api_client, '/api/foata/map/', {'text': '312', 'k': 3})
        assert response.data['map'] == 'partial-foata'
        assert response.data['k'] == 3

    def test_partial_on_word(self, api_client):
        assert post(api_client, '/api/foata/map/', {'text': '112', 'k': 2}).status_code == 400

    def test_fixed(self, api_client):
        response = post(api_client, '/api/foata/fixed/', {'permutation': '45367281'})
        assert response.data['strong'] is True
        assert response.data['han'] is True
        assert response.data['permutation'] == {'n': 8, 'values': [4, 5, 3, 6, 7, 2, 8, 1]}


class TestHanEndpoints:

    def test_map(self, api_client):
        response = post(api_client, '/api/han/map/', {'permutation': '392648517'})
        assert response.data['output'] == '496182537'

    def test_inverse(self, api_client):
        response = post(api_client, '/api/han/map/', {'permutation': '496182537', 'inverse': True})
        assert response.data['map'] == 'han-inverse'
        assert response.data['output'] == '392648517'

    def test_trace(self, api_client):
        response = post(api_client, '/api/han/trace/', {'permutation': '392648517'})
        assert response.data['l_sequence'] == [1, 2, 2, 1, 4, 2, 4, 3, 7]
        assert response.data['construction'][0]['x'] == 7
        assert response.data['image'] == {'n': 9, 'values': [4, 9, 6, 1, 8, 2, 5, 3, 7]}


class TestVerificationEndpoints:

    def test_verify(self, api_client):
        response = post(api_client, '/api/verification/verify/', {'suite': 'han', 'n': 3})
        assert response.status_code == 200
        assert response.data['passed'] is True
        assert len(response.data['reports']) > 0

    def test_verify_cap(self, api_client):
        response = post(api_client, '/api/verification/verify/', {'suite': 'han', 'n': 12})
        assert response.status_code == 400
        assert 'cap' in response.data['error']

    def test_verify_ignores_cap_override(self, api_client):
        response = post(api_client, '/api/verification/verify/', {'suite': 'han', 'n': 10, 'max_n': 1000})
        assert response.status_code == 400
        assert 'cap' in response.data['error']

    def test_table(self, api_client):
        response = post(api_client, '/api/verification/table/', {'stat': 'maj', 'n': 4})
        assert response.data['coefficients'] == [1, 3, 5, 6, 5, 3, 1]
        assert response.data['target'] == 'S_4'

    def test_table_spec(self, api_client):
        response = post(api_client, '/api/verification/table/', {'stat': 'inv', 'spec': '1^2,2^1'})
        assert response.data['coefficients'] == [1, 1, 1]

    def test_table_needs_target(self, api_client):
        assert post(api_client, '/api/verification/table/', {'stat': 'maj'}).status_code == 400

    def test_fixed_points(self, api_client):
        response = post(api_client, '/api/verification/fixed-points/', {'n': 4})
        assert response.data['count'] == 8
        assert response.data['permutations'][0] == {'n': 4, 'values': [1, 2, 3, 4]}


@pytest.mark.parametrize('url', ['/api/schema/'])
def test_schema(api_client, url):
    assert api_client.get(url).status_code == 200


def test_schema_documents_permutation_rendering(api_client):
    schemas = api_client.get('/api/schema/').data['components']['schemas']
    assert set(schemas['Permutation']['properties']) == {'n', 'values'}
    assert schemas['MapResult']['properties']['image']['$ref'] == '#/components/schemas/Permutation'
